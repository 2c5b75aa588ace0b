#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liepm/certificate.hpp"
#include "liepm/uea.hpp"

namespace liepm {

/// Ordered list of subalgebras (B_1, ..., B_s), read as the claim
/// U(L) = U(B_1) ... U(B_s).
struct FactorizationScheme {
    std::vector<Subspace> factors;
    std::vector<std::string> labels;
};

enum class Execution { serial, parallel };

/// One product m_1 ... m_s of PBW monomials in the factor bases, stored as the
/// exponent vector of each factor.
using FactorProduct = std::vector<Exponents>;

/// Every product of factor monomials with total degree <= d, in a fixed
/// order (factor by factor, each factor's monomials in lexicographic order).
std::vector<FactorProduct> enumerate_products(const FactorizationScheme& scheme, unsigned d);

/// Normal forms of the enumerated products, in enumeration order. The serial
/// path uses one Normalizer; the parallel path gives each OpenMP thread its
/// own and writes row i to slot i, so both return identical vectors.
std::vector<PBWPoly> normalize_products(const LieAlgebra& L, const FactorizationScheme& scheme,
                                        const std::vector<FactorProduct>& products, Execution ex);

/// Highest product degree span_certificate tries for filtration degree d.
unsigned product_degree_bound(unsigned d);

/// Passes iff U(L) of filtration degree <= d lies in the span of the
/// normalized products, i.e. span(products) cap U_{<=d} has rank
/// C(d + dim, dim). Products are added one total degree D at a time, from 0
/// up to product_degree_bound(d), stopping once the rank is reached: lower
/// filtration pieces are often hit only through cancellation between longer
/// products (h = ef - fe in sl2). Rank is read off graded pivots, so the
/// result does not depend on row order. On failure the witnesses list PBW
/// monomials of degree <= d outside the pivot set, a basis of a complement.
Certificate span_certificate(const LieAlgebra& L, const FactorizationScheme& scheme, unsigned d,
                             Execution ex = Execution::parallel);

/// P, M subalgebras, P + M != L, and U(L) = U(P) U(M) U(P) up to degree d.
Certificate verify_pm_pair(const LieAlgebra& L, const Subspace& P, const Subspace& M, unsigned d,
                           Execution ex = Execution::parallel);

/// verify_pm_pair plus P cap M = 0, sigma an involutive automorphism with
/// sigma(P) = M, and U(L) = U(M) U(P) U(M) up to degree d.
Certificate verify_regular_pair(const LieAlgebra& L, const Subspace& P, const Subspace& M, const Matrix& sigma,
                                unsigned d, Execution ex = Execution::parallel);

/// Bounded seeded search over pairs of lines F u, F v whose representatives
/// have coordinates in {-1, 0, 1}. Heuristic: a failure proves nothing. The
/// first passing pair, if any, is reported in the witnesses.
Certificate search_pm_pair(const LieAlgebra& L, unsigned d, std::uint64_t seed, std::size_t attempts = 40);

}  // namespace liepm
