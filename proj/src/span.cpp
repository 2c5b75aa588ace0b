#include "liepm/span.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "liepm/errors.hpp"
#include "liepm/sparse_echelon.hpp"

namespace liepm {

namespace {

constexpr std::size_t max_listed_witnesses = 10;

/// (-total degree, exponents): higher degree sorts first.
using GradedKey = std::pair<std::int64_t, Exponents>;

std::string label_of(const FactorizationScheme& s, std::size_t i) {
    return i < s.labels.size() && !s.labels[i].empty() ? s.labels[i] : "factor " + std::to_string(i + 1);
}

PBWPoly normalize_product(Normalizer& nf, const std::vector<std::vector<Vector>>& bases, const FactorProduct& p) {
    PBWPoly acc = PBWPoly::unit(nf.algebra().dim());
    for (std::size_t f = p.size(); f-- > 0;) {
        const Exponents& e = p[f];
        for (std::size_t i = e.size(); i-- > 0;) {
            for (std::uint32_t t = 0; t < e[i]; ++t) {
                acc = nf.left_multiply(bases[f][i], acc);
            }
        }
    }
    return acc;
}

GradedKey graded_key(const Exponents& e) { return {-static_cast<std::int64_t>(total_degree(e)), e}; }

SparseVector<GradedKey> graded(const PBWPoly& p) {
    SparseVector<GradedKey> out;
    for (const auto& [e, c] : p.terms()) {
        out.emplace(graded_key(e), c);
    }
    return out;
}

std::string describe_lines(const LieAlgebra& L, const Vector& u, const Vector& v) {
    return "P = F(" + L.format(u) + "), M = F(" + L.format(v) + ")";
}

}  // namespace

unsigned product_degree_bound(unsigned d) { return 2 * d + 2; }

std::vector<FactorProduct> enumerate_products(const FactorizationScheme& scheme, unsigned d) {
    std::vector<std::vector<Exponents>> monomials;
    for (const auto& f : scheme.factors) {
        monomials.push_back(pbw_monomials(f.dim(), d));
    }
    std::vector<FactorProduct> out;
    FactorProduct cur(scheme.factors.size());
    auto rec = [&](auto&& self, std::size_t f, std::size_t budget) -> void {
        if (f == scheme.factors.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& m : monomials[f]) {
            const std::size_t deg = total_degree(m);
            if (deg <= budget) {
                cur[f] = m;
                self(self, f + 1, budget - deg);
            }
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<PBWPoly> normalize_products(const LieAlgebra& L, const FactorizationScheme& scheme,
                                        const std::vector<FactorProduct>& products, Execution ex) {
    std::vector<std::vector<Vector>> bases;
    for (const auto& f : scheme.factors) {
        if (f.ambient() != L.dim()) {
            throw DimensionMismatch("factor lives in a space of the wrong dimension");
        }
        bases.push_back(f.basis());
    }
    std::vector<PBWPoly> rows(products.size());
    const auto n = static_cast<std::ptrdiff_t>(products.size());
    if (ex == Execution::serial) {
        Normalizer nf(L);
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            rows[i] = normalize_product(nf, bases, products[i]);
        }
        return rows;
    }
#pragma omp parallel
    {
        Normalizer nf(L);
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            rows[i] = normalize_product(nf, bases, products[i]);
        }
    }
    return rows;
}

Certificate span_certificate(const LieAlgebra& L, const FactorizationScheme& scheme, unsigned d, Execution ex) {
    Certificate cert;
    cert.check = "span";
    ScopedTimer timer(cert);
    cert.degree = d;
    cert.target = pbw_count(L.dim(), d);
    std::string names;
    for (std::size_t i = 0; i < scheme.factors.size(); ++i) {
        names += (i ? ", " : "") + label_of(scheme, i) + " (dim " + std::to_string(scheme.factors[i].dim()) + ")";
    }
    cert.details["scheme"] = names;

    for (std::size_t i = 0; i < scheme.factors.size(); ++i) {
        if (!is_subalgebra(L, scheme.factors[i])) {
            cert.rank = 0;
            cert.verdict = false;
            cert.witnesses.push_back(label_of(scheme, i) + " is not a subalgebra");
            return cert;
        }
    }

    // Pivots are the highest-degree terms, so span(products) cap U_{<=d} is
    // spanned by the rows whose pivot has degree <= d.
    EchelonBasis<GradedKey> span;
    std::size_t reached = 0;
    std::size_t product_count = 0;
    const unsigned bound = product_degree_bound(d);
    unsigned D = 0;
    for (; D <= bound; ++D) {
        std::vector<FactorProduct> products;
        for (auto& p : enumerate_products(scheme, D)) {
            std::size_t deg = 0;
            for (const auto& e : p) {
                deg += total_degree(e);
            }
            if (deg == D) {
                products.push_back(std::move(p));
            }
        }
        product_count += products.size();
        for (const auto& r : normalize_products(L, scheme, products, ex)) {
            if (span.insert(graded(r)) && -span.last_pivot().first <= static_cast<std::int64_t>(d)) {
                ++reached;
            }
        }
        if (D >= d && reached == *cert.target) {
            break;
        }
    }
    cert.rank = reached;
    cert.details["products"] = std::to_string(product_count);
    cert.details["product_degree"] = std::to_string(std::min(D, bound));
    cert.verdict = cert.rank == cert.target;
    if (!cert.verdict) {
        std::size_t missing = 0;
        for (const auto& e : pbw_monomials(L.dim(), d)) {
            if (!span.is_pivot(graded_key(e))) {
                if (missing < max_listed_witnesses) {
                    cert.witnesses.push_back("missing " + format(L, PBWPoly::monomial(e)).substr(4));
                }
                ++missing;
            }
        }
        cert.details["missing_dimension"] = std::to_string(missing);
    }
    return cert;
}

Certificate verify_pm_pair(const LieAlgebra& L, const Subspace& P, const Subspace& M, unsigned d, Execution ex) {
    Certificate cert;
    cert.check = "pm_pair";
    ScopedTimer timer(cert);
    cert.degree = d;
    cert.target = pbw_count(L.dim(), d);
    if (!is_subalgebra(L, P)) {
        cert.witnesses.push_back("P is not a subalgebra");
        return cert;
    }
    if (!is_subalgebra(L, M)) {
        cert.witnesses.push_back("M is not a subalgebra");
        return cert;
    }
    const std::size_t sum = (P + M).dim();
    cert.details["dim(P+M)"] = std::to_string(sum);
    if (sum >= L.dim()) {
        cert.witnesses.push_back("P + M = L");
        return cert;
    }
    const Certificate span = span_certificate(L, {{P, M, P}, {"P", "M", "P"}}, d, ex);
    cert.rank = span.rank;
    cert.witnesses = span.witnesses;
    for (const auto& [k, v] : span.details) {
        cert.details[k] = v;
    }
    cert.verdict = span.verdict;
    return cert;
}

Certificate verify_regular_pair(const LieAlgebra& L, const Subspace& P, const Subspace& M, const Matrix& sigma,
                                unsigned d, Execution ex) {
    Certificate cert = verify_pm_pair(L, P, M, d, ex);
    cert.check = "regular_pair";
    ScopedTimer timer(cert);
    if (!cert.verdict) {
        return cert;
    }
    cert.verdict = false;
    auto fail = [&](const std::string& w) {
        cert.witnesses.push_back(w);
        return cert;
    };
    if (P.intersect(M).dim() != 0) {
        return fail("P and M intersect nontrivially");
    }
    if (sigma.rows() != L.dim() || sigma.cols() != L.dim()) {
        return fail("sigma has the wrong size");
    }
    if (determinant(sigma) == 0) {
        return fail("sigma is not invertible");
    }
    if (!is_homomorphism(L, sigma)) {
        return fail("sigma does not preserve the bracket");
    }
    if (sigma * sigma != Matrix::identity(L.dim())) {
        return fail("sigma^2 != id");
    }
    std::vector<Vector> image;
    for (const auto& v : P.basis()) {
        image.push_back(sigma * v);
    }
    if (Subspace::span(L.dim(), image) != M) {
        return fail("sigma(P) != M");
    }
    const Certificate mpm = span_certificate(L, {{M, P, M}, {"M", "P", "M"}}, d, ex);
    cert.details["rank(MPM)"] = std::to_string(*mpm.rank);
    if (!mpm.verdict) {
        cert.witnesses = mpm.witnesses;
        return fail("U(M)U(P)U(M) does not span");
    }
    cert.verdict = true;
    return cert;
}

Certificate search_pm_pair(const LieAlgebra& L, unsigned d, std::uint64_t seed, std::size_t attempts) {
    Certificate cert;
    cert.check = "pair_search";
    ScopedTimer timer(cert);
    cert.degree = d;
    cert.seed = seed;
    cert.details["mode"] = "heuristic";

    // Lines through vectors with entries in {-1, 0, 1}, first nonzero entry 1.
    const std::size_t n = L.dim();
    std::vector<Vector> lines;
    Vector cur(n);
    auto rec = [&](auto&& self, std::size_t pos, bool leading) -> void {
        if (pos == n) {
            if (!leading) {
                lines.push_back(cur);
            }
            return;
        }
        for (int c : {0, 1, -1}) {
            if (leading && c == -1) {
                continue;
            }
            cur[pos] = c;
            self(self, pos + 1, leading && c == 0);
        }
    };
    rec(rec, 0, true);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (i != j) {
                pairs.emplace_back(i, j);
            }
        }
    }
    std::mt19937_64 engine(seed);
    std::shuffle(pairs.begin(), pairs.end(), engine);
    pairs.resize(std::min(attempts, pairs.size()));
    cert.details["attempts"] = std::to_string(pairs.size());

    for (const auto& [i, j] : pairs) {
        const Subspace P = Subspace::span(n, {lines[i]});
        const Subspace M = Subspace::span(n, {lines[j]});
        if (verify_pm_pair(L, P, M, d, Execution::serial).verdict) {
            cert.verdict = true;
            cert.witnesses.push_back(describe_lines(L, lines[i], lines[j]));
            return cert;
        }
    }
    return cert;
}

}  // namespace liepm
