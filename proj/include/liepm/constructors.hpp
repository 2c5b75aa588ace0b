#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liepm/lie_algebra.hpp"

namespace liepm {

/// sl2 on basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2();
/// Heisenberg algebra on (x, y, z): [x,y] = z, z central.
LieAlgebra heisenberg();
/// The algebra on (x, y, z) with [x,y] = 0, [x,z] = x, [y,z] = y.
LieAlgebra g_special();
/// K(a,b) on (x, y, z): [x,y] = 0, [x,z] = a x, [y,z] = b y.
LieAlgebra k_family(const Scalar& a, const Scalar& b);
/// The matrix algebra spanned by A(r), X, Y; r = nullopt means r = infinity.
LieAlgebra a_family(const std::optional<Scalar>& r);
LieAlgebra abelian(std::size_t dim);

/// Representatives of the five cases of the three-dimensional classification:
///   a: abelian
///   b: [x,y] = z, z central                                   (no params)
///   c: [x,y] = x, z central                                   (no params)
///   d: [x,y] = 0, [x,z] = p0 x + p1 y, [y,z] = p2 x + p3 y    (p0 p3 - p1 p2 != 0)
///   e: [x,y] = z, [x,z] = p0 y, [y,z] = p1 x                  (p0 p1 != 0)
LieAlgebra jacobson_case(char tag, const std::vector<Scalar>& params = {});

/// sl3 in the Chevalley basis (e1, e2, e3, h1, h2, f1, f2, f3) realized by
/// E12, E23, E13, E11-E22, E22-E33, E21, E32, E31.
LieAlgebra sl3_chevalley();
/// Rank-one Borcherds algebra with zero Cartan entry: (e, h, f) with
/// [e,f] = h and h central.
LieAlgebra borcherds_rank1_zero();

/// Gradings on the basis orders above.
Grading sl2_grading();          // e:(1) h:(0) f:(-1)
Grading heisenberg_grading();   // x:(1) y:(-1) z:(0)
Grading sl3_root_grading();     // Z^2 = Z alpha_1 + Z alpha_2
Grading borcherds_rank1_grading();

/// Chevalley-type data: Cartan subalgebra, positive and negative parts and
/// the generators e_i, f_i.
struct TriangularDecomposition {
    Subspace gplus;
    Subspace gminus;
    Subspace cartan;
    std::vector<Vector> e;
    std::vector<Vector> f;
};

TriangularDecomposition sl2_triangular();
TriangularDecomposition sl3_triangular();
TriangularDecomposition borcherds_rank1_triangular();

/// Named constructor lookup used by the command line ("sl2", "heisenberg",
/// "g_special", "sl3", "borcherds_rank1_zero", "abelian3").
std::optional<LieAlgebra> builtin_algebra(const std::string& name);

}  // namespace liepm
