#pragma once

#include <cstddef>

#include "liepm/certificate.hpp"
#include "liepm/sparse_echelon.hpp"
#include "liepm/uea.hpp"

namespace liepm {

/// Subspace of U(L) in PBW coordinates.
using PBWSpan = EchelonBasis<Exponents>;

/// U_k = sum_{0 <= m <= k} (F x y^m + F y^m x), generators inserted as
/// x y^0, y^0 x, x y^1, y^1 x, ...
PBWSpan uk_subspace(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k);
PBWSpan uk_subspace(const LieAlgebra& L, const Vector& x, const Vector& y, std::size_t k);

/// Exact residual of the (A_k) congruence:
///   y x y^k - k/(k+1) x y^(k+1) - 1/(k+1) y^(k+1) x.
PBWPoly ak_correction(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k);
/// Exact residual of (B_k):
///   y^k x y - 1/(k+1) x y^(k+1) - k/(k+1) y^(k+1) x.
PBWPoly bk_correction(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k);

/// For each k <= k_max, tests by exact membership that the (A_k) and (B_k)
/// corrections lie in U_k and that y U_k and U_k y lie in U_(k+1).
///
/// The certificate records every correction term and, per k, which of the
/// three memberships hold. The first failing membership is the witness.
/// Details also report whether each correction has filtration degree <= k,
/// which is the weaker congruence that always holds.
Certificate check_ak_bk(const LieAlgebra& L, const Vector& x, const Vector& y, std::size_t k_max);

}  // namespace liepm
