#include "liepm/repcheck.hpp"

#include <algorithm>

#include "liepm/constructors.hpp"
#include "liepm/errors.hpp"
#include "liepm/random.hpp"
#include "liepm/sparse_echelon.hpp"

namespace liepm {

namespace {

// Polynomials as coefficient vectors, constant term first, no trailing zeros.
using Poly = Vector;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(Scalar(static_cast<unsigned long>(i)) * p[i]);
    }
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Scalar q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= q * b[i];
        }
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Divides p by (t - r), assuming r is a root.
Poly deflate(const Poly& p, const Scalar& r) {
    Poly q(p.size() - 1);
    Scalar carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

Scalar evaluate(const Poly& p, const Scalar& t) {
    Scalar acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * t + p[i];
    }
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) {
                out.push_back(n / d);
            }
        }
    }
    return out;
}

// Rational roots with multiplicity via the rational root theorem.
std::vector<Scalar> rational_roots(Poly p) {
    std::vector<Scalar> roots;
    trim(p);
    while (p.size() > 1 && p.front() == 0) {
        roots.push_back(0);
        p.erase(p.begin());
    }
    bool progress = true;
    while (p.size() > 1 && progress) {
        progress = false;
        mpz_class lcm = 1;
        for (const auto& c : p) {
            lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
        }
        const mpz_class a0 = Scalar(p.front() * lcm).get_num();
        const mpz_class an = Scalar(p.back() * lcm).get_num();
        for (const auto& num : divisors(a0)) {
            for (const auto& den : divisors(an)) {
                for (int sign : {1, -1}) {
                    Scalar r(sign * num, den);
                    r.canonicalize();
                    if (!progress && evaluate(p, r) == 0) {
                        roots.push_back(r);
                        p = deflate(p, r);
                        progress = true;
                    }
                }
            }
        }
    }
    return roots;
}

std::vector<Scalar> flatten(const Matrix& m) {
    std::vector<Scalar> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.push_back(m(r, c));
        }
    }
    return out;
}

SparseVector<std::size_t> sparse(const std::vector<Scalar>& v) {
    SparseVector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            out.emplace(i, v[i]);
        }
    }
    return out;
}

Matrix restrict_matrix(const Matrix& A, const Subspace& S) {
    const auto basis = S.basis();
    Matrix out(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto c = S.coordinates(A * basis[j]);
        if (!c) {
            throw InvalidArgument("subspace is not invariant under the matrix");
        }
        out.set_column(j, *c);
    }
    return out;
}

}  // namespace

Matrix Representation::act(const Vector& u) const {
    Matrix out(size(), size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 0) {
            out = out + u[i] * rho.at(i);
        }
    }
    return out;
}

Certificate verify_rep(const Representation& R) {
    Certificate cert;
    cert.check = "rep";
    ScopedTimer timer(cert);
    const std::size_t n = R.algebra.dim();
    if (R.rho.size() != n) {
        throw DimensionMismatch("representation needs one matrix per basis element");
    }
    for (const auto& m : R.rho) {
        if (m.rows() != R.size() || m.cols() != R.size()) {
            throw DimensionMismatch("representation matrices differ in size");
        }
    }
    cert.details["module_dim"] = std::to_string(R.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (R.act(R.algebra.structure(i, j)) != commutator(R.rho[i], R.rho[j])) {
                const auto& names = R.algebra.basis_names();
                cert.witnesses.push_back("rho([" + names[i] + "," + names[j] + "]) != [rho(" + names[i] + "), rho(" +
                                         names[j] + ")]");
                return cert;
            }
        }
    }
    cert.verdict = true;
    return cert;
}

Representation sl2_irrep(unsigned n) {
    const std::size_t dim = n + 1;
    Matrix e(dim, dim), h(dim, dim), f(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = static_cast<long>(n) - 2 * static_cast<long>(i);
        if (i + 1 < dim) {
            f(i + 1, i) = static_cast<unsigned long>(i + 1);
        }
        if (i > 0) {
            e(i - 1, i) = static_cast<unsigned long>(n - i + 1);
        }
    }
    return {sl2(), {e, h, f}};
}

Representation zero_representation(const LieAlgebra& L, std::size_t n) {
    return {L, std::vector<Matrix>(L.dim(), Matrix(n, n))};
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.algebra == b.algebra)) {
        throw InvalidArgument("direct sum of modules over different algebras");
    }
    const std::size_t n = a.size(), m = b.size();
    Representation out{a.algebra, {}};
    for (std::size_t k = 0; k < a.rho.size(); ++k) {
        Matrix s(n + m, n + m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                s(i, j) = a.rho[k](i, j);
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                s(n + i, n + j) = b.rho[k](i, j);
            }
        }
        out.rho.push_back(std::move(s));
    }
    return out;
}

Representation representation_from_json(const LieAlgebra& L, const nlohmann::json& j) {
    Representation R{L, {}};
    for (const auto& name : L.basis_names()) {
        if (!j.contains(name)) {
            throw InvalidArgument("representation is missing the matrix for " + name);
        }
        std::vector<Vector> rows;
        for (const auto& row : j.at(name)) {
            Vector v;
            for (const auto& c : row) {
                v.push_back(c.is_string() ? parse_scalar(c.get<std::string>()) : Scalar(c.get<long>()));
            }
            rows.push_back(std::move(v));
        }
        if (R.rho.empty() ? false : rows.size() != R.rho.front().rows()) {
            throw DimensionMismatch("matrix for " + name + " has a different size");
        }
        for (const auto& v : rows) {
            if (v.size() != rows.size()) {
                throw DimensionMismatch("matrix for " + name + " is not square");
            }
        }
        R.rho.push_back(Matrix::from_rows(rows, rows.size()));
    }
    return R;
}

bool is_nilpotent(const Matrix& A) {
    if (!A.is_square()) {
        throw DimensionMismatch("is_nilpotent needs a square matrix");
    }
    return power(A, A.rows()).is_zero();
}

GeneratedSubmodule generated_submodule(const Representation& R, const Vector& v, const Vector& x, const Vector& y,
                                       unsigned d) {
    const Matrix X = R.act(x);
    const Matrix Y = R.act(y);
    const std::size_t n = R.size();
    GeneratedSubmodule out;
    std::vector<Vector> vectors;
    // xk[k] = X^k v; yx[j][k] = Y^j X^k v.
    std::vector<Vector> xk{v};
    for (unsigned k = 1; k <= d; ++k) {
        xk.push_back(X * xk.back());
    }
    for (unsigned t = 0; t <= d; ++t) {
        for (unsigned j = 0; j <= t; ++j) {
            for (unsigned k = 0; j + k <= t; ++k) {
                Vector w = xk[k];
                for (unsigned s = 0; s < j; ++s) {
                    w = Y * w;
                }
                for (unsigned i = 0; i < t - j - k; ++i) {
                    w = X * w;
                }
                vectors.push_back(std::move(w));
            }
        }
        out.dims.push_back(Subspace::span(n, vectors).dim());
        if (t > 0 && out.dims[t] == out.dims[t - 1]) {
            out.stabilized = true;
        }
    }
    out.span = Subspace::span(n, vectors);
    out.invariant = true;
    for (const auto& m : R.rho) {
        for (const auto& b : out.span.basis()) {
            if (!out.span.contains(m * b)) {
                out.invariant = false;
            }
        }
    }
    return out;
}

Vector minimal_polynomial(const Matrix& A) {
    if (!A.is_square()) {
        throw DimensionMismatch("minimal polynomial of a non-square matrix");
    }
    EchelonBasis<std::size_t> powers;
    Matrix P = Matrix::identity(A.rows());
    while (powers.insert(sparse(flatten(P)))) {
        P = P * A;
    }
    const auto& dep = powers.dependencies().back();
    Poly p(dep.first + 1, Scalar(0));
    p[dep.first] = 1;
    for (const auto& [i, c] : dep.second) {
        p[i] -= c;
    }
    return p;
}

SemisimpleResult semisimple_on(const Matrix& h, const Subspace& S) {
    const Matrix A = restrict_matrix(h, S);
    SemisimpleResult out;
    if (S.dim() == 0) {
        out.semisimple = true;
        out.minimal_polynomial = {Scalar(1)};
        return out;
    }
    out.minimal_polynomial = minimal_polynomial(A);
    const Poly& p = out.minimal_polynomial;
    if (gcd(p, derivative(p)).size() > 1) {
        out.reason = "minimal polynomial not squarefree";
        return out;
    }
    const auto roots = rational_roots(p);
    if (roots.size() + 1 != p.size()) {
        out.reason = "irrational spectrum";
        return out;
    }
    for (const auto& r : roots) {
        const std::size_t mult = nullspace(A - r * Matrix::identity(A.rows())).size();
        out.spectrum.insert(out.spectrum.end(), mult, r);
    }
    std::sort(out.spectrum.begin(), out.spectrum.end(), std::greater<>());
    out.semisimple = true;
    return out;
}

Certificate sl2_module_identities(const Representation& R, unsigned n) {
    Certificate cert;
    cert.check = "sl2_module_identities";
    ScopedTimer timer(cert);
    const auto ie = R.algebra.index_of("e"), ih = R.algebra.index_of("h"), iff = R.algebra.index_of("f");
    if (!ie || !ih || !iff) {
        throw InvalidArgument("sl2 identities need basis symbols e, h, f");
    }
    const Matrix& E = R.rho[*ie];
    const Matrix& H = R.rho[*ih];
    const Matrix& F = R.rho[*iff];
    const std::size_t dim = R.size();
    const Matrix I = Matrix::identity(dim);
    cert.details["n"] = std::to_string(n);

    const Matrix En = power(E, n);
    const Matrix lhs = F * En;
    Matrix rhs = En * F;
    if (n > 0) {
        rhs = rhs - Scalar(n) * (power(E, n - 1) * (H + Scalar(static_cast<long>(n) - 1) * I));
    }
    if (lhs != rhs) {
        cert.witnesses.push_back("f e^" + std::to_string(n) + " != e^n f - n e^(n-1) (h + n - 1)");
        return cert;
    }
    bool found = false;
    for (const auto& v : nullspace(F)) {
        const Vector w = En * v;
        if (is_zero(w) || !is_zero(E * w)) {
            continue;
        }
        found = true;
        if (H * w != Scalar(n) * w) {
            cert.witnesses.push_back("h(e^n v) != n (e^n v) for v = " + to_string(v));
            return cert;
        }
    }
    cert.details["weight_vector_found"] = found ? "yes" : "no";
    if (!found) {
        cert.witnesses.push_back("no v with f v = 0, e^n v != 0, e^(n+1) v = 0");
        return cert;
    }
    cert.verdict = true;
    return cert;
}

Certificate rep_suite(const Representation& R, const RepSuiteOptions& opt) {
    Certificate cert = verify_rep(R);
    cert.check = "rep_suite";
    ScopedTimer timer(cert);
    cert.seed = opt.seed;
    cert.degree = opt.degree;
    if (!cert.verdict) {
        return cert;
    }
    auto fail = [&](const std::string& w) {
        cert.verdict = false;
        cert.witnesses.push_back(w);
    };
    for (const auto& name : opt.nilpotent) {
        const auto i = R.algebra.index_of(name);
        if (!i) {
            throw InvalidArgument("unknown basis symbol " + name);
        }
        const bool nil = is_nilpotent(R.rho[*i]);
        cert.details["nilpotent " + name] = nil ? "yes" : "no";
        if (!nil) {
            fail(name + " is not nilpotent");
        }
    }
    Rng rng(opt.seed);
    std::size_t whole = 0;
    for (std::size_t s = 0; s < opt.samples; ++s) {
        const Vector v = rng.nonzero_vector(R.size());
        const auto g = generated_submodule(R, v, opt.x, opt.y, opt.degree);
        if (!g.stabilized || !g.invariant) {
            fail("generated submodule of " + to_string(v) + (g.stabilized ? " is not invariant" : " did not stabilize"));
        }
        whole += g.span.dim() == R.size() ? 1 : 0;
    }
    cert.details["samples"] = std::to_string(opt.samples);
    cert.details["samples_generating_module"] = std::to_string(whole);
    if (opt.semisimple) {
        const auto i = R.algebra.index_of(*opt.semisimple);
        if (!i) {
            throw InvalidArgument("unknown basis symbol " + *opt.semisimple);
        }
        const auto s = semisimple_on(R.rho[*i], Subspace::whole(R.size()));
        std::string values;
        for (const auto& l : s.spectrum) {
            values += (values.empty() ? "" : ", ") + to_string(l);
        }
        cert.details["spectrum " + *opt.semisimple] = "{" + values + "}";
        if (!s.semisimple) {
            fail(*opt.semisimple + " is not diagonalizable over Q: " + s.reason);
        }
    }
    return cert;
}

}  // namespace liepm
