#pragma once

#include <set>
#include <vector>

#include "liepm/constructors.hpp"
#include "liepm/span.hpp"

namespace liepm {

/// (F e_i)_{i in I}, g_-, h'', g_+, (F f_j)_{j in J} with h'' the complement
/// of h' = h cap [L, L] in h. Indices are 1-based. Throws InvalidArgument
/// unless I and J partition {1..l}.
FactorizationScheme borcherds_scheme(const LieAlgebra& L, const TriangularDecomposition& t,
                                     const std::set<std::size_t>& I, const std::set<std::size_t>& J);

struct ZGradedScheme {
    /// g_alpha1, g_-, g_0', g_+.
    FactorizationScheme scheme;
    /// One witness line per hypothesis checked, all passing.
    Certificate hypotheses;
    /// g_+ + g_0' and g_-, the candidate pair of the "moreover" part.
    Subspace plus;
    Subspace minus;
};

/// Splits a Z^n-graded L along the positivity order. Checks, in order:
///   grading, alpha1 != 0, Z alpha1 cap Delta = {0, +-alpha1},
///   [g_alpha1, g_-alpha1] != 0, g_alpha1 + [g_alpha1, g_-alpha1] + g_-alpha1
///   is a subalgebra, (g_alpha1, g_-alpha1) is a plus-minus pair in it up to
///   degree d, and g_0' is a subalgebra.
/// The first failure throws HypothesisFailed naming the hypothesis.
ZGradedScheme zgraded_scheme(const LieAlgebra& L, const Grading& grading, const std::vector<long long>& alpha1,
                             unsigned d);

/// Named subspaces of a graded algebra: "gplus", "gminus", "g0".
Subspace graded_part(const LieAlgebra& L, const Grading& grading, Sign sign);

}  // namespace liepm
