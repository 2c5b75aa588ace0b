#include "liepm/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liepm/errors.hpp"

namespace liepm {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<Vector> table)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)) {
    const std::size_t n = basis_.size();
    if (table_.size() != n * n) {
        throw DimensionMismatch("structure table must have dim*dim entries");
    }
    for (const auto& v : table_) {
        if (v.size() != n) {
            throw DimensionMismatch("structure constant vector has wrong length");
        }
    }
    std::set<std::string> seen;
    for (const auto& s : basis_) {
        if (!seen.insert(s).second) {
            throw InvalidArgument("duplicate basis symbol '" + s + "'");
        }
    }
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::vector<std::string> basis,
                                     const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets) {
    const std::size_t n = basis.size();
    std::vector<Vector> table(n * n, zero_vector(n));
    std::vector<bool> set(n * n, false);
    auto put = [&](std::size_t i, std::size_t j, const Vector& v) {
        if (set[i * n + j] && table[i * n + j] != v) {
            throw InvalidArgument("conflicting bracket [" + basis[i] + "," + basis[j] + "]");
        }
        table[i * n + j] = v;
        set[i * n + j] = true;
    };
    for (const auto& [i, j, v] : brackets) {
        if (i >= n || j >= n || v.size() != n) {
            throw DimensionMismatch("bracket indices or vector out of range");
        }
        if (i == j) {
            if (!is_zero(v)) {
                throw InvalidArgument("[" + basis[i] + "," + basis[i] + "] must be zero");
            }
            continue;
        }
        put(i, j, v);
        put(j, i, Scalar(-1) * v);
    }
    return LieAlgebra(std::move(name), std::move(basis), std::move(table));
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> basis,
                                     const std::vector<Matrix>& matrices) {
    const std::size_t n = matrices.size();
    if (basis.size() != n || n == 0) {
        throw DimensionMismatch("need one symbol per matrix");
    }
    const std::size_t rows = matrices[0].rows();
    const std::size_t cols = matrices[0].cols();
    auto flatten = [&](const Matrix& m) {
        if (m.rows() != rows || m.cols() != cols) {
            throw DimensionMismatch("matrices must share a shape");
        }
        Vector v;
        v.reserve(rows * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                v.push_back(m(r, c));
            }
        }
        return v;
    };
    std::vector<Vector> columns;
    for (const auto& m : matrices) {
        columns.push_back(flatten(m));
    }
    const Matrix A = Matrix::from_columns(columns, rows * cols);
    if (liepm::rank(A) != n) {
        throw InvalidArgument("matrices are linearly dependent");
    }
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = solve(A, flatten(commutator(matrices[i], matrices[j])));
            if (!coords) {
                throw InvalidArgument("matrix span is not closed under the commutator");
            }
            table[i * n + j] = std::move(*coords);
        }
    }
    return LieAlgebra(std::move(name), std::move(basis), std::move(table));
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == symbol) {
            return i;
        }
    }
    return std::nullopt;
}

std::string LieAlgebra::format(const Vector& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        const bool negative = v[i] < 0;
        const Scalar mag = abs(v[i]);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) {
            out += to_string(mag) + (mag.get_den() == 1 ? "" : "*");
        }
        out += basis_.at(i);
    }
    return out.empty() ? "0" : out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) {
        return s;
    }
    Echelon e = row_reduce(Matrix::from_rows(vectors, ambient));
    s.rref_ = std::move(e.rref);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> units;
    for (std::size_t i = 0; i < ambient; ++i) {
        units.push_back(unit_vector(ambient, i));
    }
    return span(ambient, units);
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rref_.rows(); ++r) {
        out.push_back(rref_.row(r));
    }
    return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) {
        throw DimensionMismatch("vector length differs from ambient dimension");
    }
    // In rref the coordinate on row r is the entry of v at pivot r.
    Vector coords(dim());
    Vector rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        coords[r] = v[pivots_[r]];
        if (coords[r] == 0) {
            continue;
        }
        for (std::size_t c = 0; c < ambient_; ++c) {
            rest[c] -= coords[r] * rref_(r, c);
        }
    }
    if (!is_zero(rest)) {
        return std::nullopt;
    }
    return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis()) {
        if (!contains(v)) {
            return false;
        }
    }
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw DimensionMismatch("subspaces live in different ambient spaces");
    }
    auto vs = basis();
    for (auto& v : other.basis()) {
        vs.push_back(std::move(v));
    }
    return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw DimensionMismatch("subspaces live in different ambient spaces");
    }
    if (dim() == 0 || other.dim() == 0) {
        return Subspace(ambient_);
    }
    // a.A = b.B  <=>  [A^T | -B^T] (a; b) = 0
    const auto a = basis();
    const auto b = other.basis();
    Matrix m(ambient_, a.size() + b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        m.set_column(r, a[r]);
    }
    for (std::size_t r = 0; r < b.size(); ++r) {
        m.set_column(a.size() + r, Scalar(-1) * b[r]);
    }
    std::vector<Vector> common;
    for (const auto& null : nullspace(m)) {
        Vector v = zero_vector(ambient_);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (null[r] != 0) {
                v = v + null[r] * a[r];
            }
        }
        common.push_back(std::move(v));
    }
    return span(ambient_, common);
}

Subspace Subspace::complement_in(const Subspace& outer) const {
    std::vector<Vector> current = basis();
    std::vector<Vector> extra;
    std::size_t d = dim();
    for (const auto& v : outer.basis()) {
        current.push_back(v);
        const std::size_t nd = liepm::rank(Matrix::from_rows(current, ambient_));
        if (nd > d) {
            extra.push_back(v);
            d = nd;
        } else {
            current.pop_back();
        }
    }
    return span(ambient_, extra);
}

Subspace Grading::component(const std::vector<long long>& alpha, std::size_t dim) const {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] == alpha) {
            vs.push_back(unit_vector(dim, i));
        }
    }
    return Subspace::span(dim, vs);
}

std::vector<std::vector<long long>> Grading::support() const {
    std::set<std::vector<long long>> s(degrees.begin(), degrees.end());
    return {s.begin(), s.end()};
}

Sign positivity(std::span<const long long> alpha) {
    for (std::size_t i = alpha.size(); i-- > 0;) {
        if (alpha[i] > 0) {
            return Sign::positive;
        }
        if (alpha[i] < 0) {
            return Sign::negative;
        }
    }
    return Sign::zero;
}

Vector bracket(const LieAlgebra& L, const Vector& u, const Vector& v) {
    const std::size_t n = L.dim();
    if (u.size() != n || v.size() != n) {
        throw DimensionMismatch("bracket arguments must have length dim");
    }
    Vector out = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0) {
                continue;
            }
            const Scalar c = u[i] * v[j];
            const Vector& s = L.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (s[k] != 0) {
                    out[k] += c * s[k];
                }
            }
        }
    }
    return out;
}

Matrix ad_matrix(const LieAlgebra& L, const Vector& u) {
    Matrix m(L.dim(), L.dim());
    for (std::size_t j = 0; j < L.dim(); ++j) {
        m.set_column(j, bracket(L, u, L.unit(j)));
    }
    return m;
}

Certificate check_axioms(const LieAlgebra& L) {
    Certificate cert;
    cert.check = "axioms";
    ScopedTimer timer(cert);
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const bool ok = i == j ? is_zero(L.structure(i, i))
                                   : L.structure(j, i) == Scalar(-1) * L.structure(i, j);
            if (!ok) {
                cert.witnesses.push_back("antisymmetry: [" + L.basis_names()[i] + "," + L.basis_names()[j] + "]");
                cert.verdict = false;
                return cert;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector a = L.unit(i), b = L.unit(j), c = L.unit(k);
                const Vector jac = bracket(L, a, bracket(L, b, c)) + bracket(L, b, bracket(L, c, a)) +
                                   bracket(L, c, bracket(L, a, b));
                if (!is_zero(jac)) {
                    const auto& s = L.basis_names();
                    cert.witnesses.push_back("jacobi (" + s[i] + "," + s[j] + "," + s[k] + ") = " + L.format(jac) +
                                             " via [" + s[i] + "," + s[j] + "], [" + s[i] + "," + s[k] + "], [" +
                                             s[j] + "," + s[k] + "]");
                    cert.verdict = false;
                    return cert;
                }
            }
        }
    }
    cert.verdict = true;
    return cert;
}

Certificate check_grading(const LieAlgebra& L, const Grading& g) {
    Certificate cert;
    cert.check = "grading";
    ScopedTimer timer(cert);
    if (g.degrees.size() != L.dim()) {
        cert.witnesses.push_back("grading has " + std::to_string(g.degrees.size()) + " degrees for dim " +
                                 std::to_string(L.dim()));
        return cert;
    }
    for (const auto& d : g.degrees) {
        if (d.size() != g.rank) {
            cert.witnesses.push_back("degree vector of wrong rank");
            return cert;
        }
    }
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = 0; j < L.dim(); ++j) {
            const Vector& v = L.structure(i, j);
            if (is_zero(v)) {
                continue;
            }
            std::vector<long long> sum(g.rank);
            for (std::size_t t = 0; t < g.rank; ++t) {
                sum[t] = g.degrees[i][t] + g.degrees[j][t];
            }
            for (std::size_t k = 0; k < L.dim(); ++k) {
                if (v[k] != 0 && g.degrees[k] != sum) {
                    cert.witnesses.push_back("[" + L.basis_names()[i] + "," + L.basis_names()[j] +
                                             "] has a component outside the expected degree");
                    return cert;
                }
            }
        }
    }
    cert.verdict = true;
    return cert;
}

Subspace derived_subalgebra(const LieAlgebra& L) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            vs.push_back(L.structure(i, j));
        }
    }
    return Subspace::span(L.dim(), vs);
}

Subspace center(const LieAlgebra& L) {
    // v is central iff sum_i v_i [b_i, b_j] = 0 for all j: stack the columns.
    const std::size_t n = L.dim();
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                m(j * n + k, i) = L.structure(i, j)[k];
            }
        }
    }
    return Subspace::span(n, nullspace(m));
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
    const auto b = S.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!S.contains(bracket(L, b[i], b[j]))) {
                return false;
            }
        }
    }
    return true;
}

bool is_abelian(const LieAlgebra& L) { return derived_subalgebra(L).dim() == 0; }

Subspace generated_subalgebra(const LieAlgebra& L, const std::vector<Vector>& gens) {
    Subspace s = Subspace::span(L.dim(), gens);
    while (true) {
        const auto b = s.basis();
        std::vector<Vector> vs = b;
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                vs.push_back(bracket(L, b[i], b[j]));
            }
        }
        Subspace next = Subspace::span(L.dim(), vs);
        if (next.dim() == s.dim()) {
            return s;
        }
        s = std::move(next);
    }
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& T) {
    if (T.rows() != L.dim() || T.cols() != L.dim()) {
        throw DimensionMismatch("basis change matrix must be dim x dim");
    }
    const auto Tinv = inverse(T);
    if (!Tinv) {
        throw SingularMatrix("basis change matrix is singular");
    }
    const std::size_t n = L.dim();
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table[i * n + j] = *Tinv * bracket(L, T.column(i), T.column(j));
        }
    }
    return LieAlgebra(L.name() + "'", L.basis_names(), std::move(table));
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S, std::string name) {
    const auto b = S.basis();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < b.size(); ++i) {
        names.push_back("s" + std::to_string(i + 1));
    }
    std::vector<Vector> table(b.size() * b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto coords = S.coordinates(bracket(L, b[i], b[j]));
            if (!coords) {
                throw InvalidArgument("subspace is not a subalgebra");
            }
            table[i * b.size() + j] = std::move(*coords);
        }
    }
    return LieAlgebra(name.empty() ? L.name() + "|sub" : std::move(name), std::move(names), std::move(table));
}

bool is_homomorphism(const LieAlgebra& L, const Matrix& sigma) {
    if (sigma.rows() != L.dim() || sigma.cols() != L.dim()) {
        throw DimensionMismatch("map must be dim x dim");
    }
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            if (sigma * L.structure(i, j) != bracket(L, sigma.column(i), sigma.column(j))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace liepm
