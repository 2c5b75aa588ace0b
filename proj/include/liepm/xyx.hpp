#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liepm/sparse_echelon.hpp"
#include "liepm/uea.hpp"

namespace liepm {

/// Exponents (i, j, k) of x^i y^j x^k.
using XYXMonomial = std::array<std::uint32_t, 3>;

std::size_t total_degree(const XYXMonomial& m);
/// x^i y^0 x^k and x^(i+k) are the same element; keys with j = 0 are stored
/// as (i + k, 0, 0).
XYXMonomial canonical(const XYXMonomial& m);
/// Number of distinct XYX monomials of degree <= d: sum_n (n(n+1)/2 + 1).
std::size_t xyx_monomial_count(std::size_t d);

/// sum c_ijk x^i y^j x^k for a designated pair (x, y).
struct XYXPoly {
    Vector x;
    Vector y;
    SparseVector<XYXMonomial> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    std::size_t degree() const;
    /// The element as a word polynomial over the basis of L.
    NCPoly to_ncpoly() const;

    friend bool operator==(const XYXPoly& a, const XYXPoly& b) = default;
};

/// `c * x^i y^j x^k` terms, with the pair rendered through L.
std::string format(const LieAlgebra& L, const XYXPoly& p);

/// Expresses elements of U(L) as XYX polynomials for a generating pair of a
/// three-dimensional Lie algebra.
///
/// The linear method solves nf(sum c_ijk x^i y^j x^k) = nf(p) against the
/// columns nf(x^i y^j x^k), added degree by degree with canonical (i, j, k) in
/// lexicographic order inside a degree. Column degree starts at deg p and is
/// raised until the system is solvable, up to 2 deg p + 2; lower filtration
/// pieces are generally reached only through cancellation at higher degree
/// (already [x, y] = xy - yx needs degree 2). The recursive method multiplies basis
/// letters onto an XYX polynomial from the left with z = [x, y] and
/// [z, x] = a x + b y + c z, taking the exact base-case corrections from the
/// normal form.
class XyxRewriter {
public:
    /// Throws DimensionMismatch unless dim L = 3 and NotGenerating unless x, y
    /// generate L.
    XyxRewriter(const LieAlgebra& L, Vector x, Vector y);
    XyxRewriter(LieAlgebra&&, Vector, Vector) = delete;

    const LieAlgebra& algebra() const noexcept { return *L_; }

    XYXPoly rewrite_linear(const NCPoly& p);
    /// Throws DegenerateBasis if x, y, [x, y] are linearly dependent.
    XYXPoly rewrite_recursive(const NCPoly& p);

    /// nf(x^i y^j x^k).
    const PBWPoly& column(const XYXMonomial& m);
    /// Rank of the canonical XYX monomials of degree <= d in U(L).
    std::size_t rank(std::size_t d);
    /// How many PBW monomials of degree <= d lie in the span of the XYX
    /// monomials of degree <= column_degree. Equals pbw_count(3, d) iff that
    /// span contains U(L) of filtration degree <= d.
    std::size_t covered(std::size_t d, std::size_t column_degree);
    /// Number of XYX monomials of degree <= d that were dependent on earlier
    /// columns, i.e. free variables of the linear system.
    std::size_t free_variables(std::size_t d);

    /// nf of the element an XYX polynomial denotes.
    PBWPoly normal_form(const XYXPoly& p);

private:
    void extend_columns(std::size_t d);
    void prepare_recursive();
    SparseVector<XYXMonomial> apply_letter(std::size_t letter, const SparseVector<XYXMonomial>& p);
    SparseVector<XYXMonomial> mul_x(const SparseVector<XYXMonomial>& p) const;
    const SparseVector<XYXMonomial>& mul_y(const XYXMonomial& m);
    const SparseVector<XYXMonomial>& mul_z(const XYXMonomial& m);
    SparseVector<XYXMonomial> mul_y(const SparseVector<XYXMonomial>& p);
    SparseVector<XYXMonomial> mul_z(const SparseVector<XYXMonomial>& p);
    const SparseVector<XYXMonomial>& correction(std::uint32_t m);

    const LieAlgebra* L_;
    Vector x_;
    Vector y_;
    Normalizer nf_;

    std::map<XYXMonomial, PBWPoly> column_cache_;
    EchelonBasis<Exponents> columns_;
    std::vector<XYXMonomial> column_keys_;
    std::vector<std::size_t> degree_end_;  // columns of degree <= d are [0, degree_end_[d])

    bool recursive_ready_ = false;
    Vector z_;
    Scalar a_, b_, c_;
    std::vector<Vector> letter_coords_;  // basis vector i in the (x, y, z) basis
    std::map<XYXMonomial, SparseVector<XYXMonomial>> y_memo_;
    std::map<XYXMonomial, SparseVector<XYXMonomial>> z_memo_;
    std::map<std::uint32_t, SparseVector<XYXMonomial>> correction_memo_;
};

XYXPoly xyx_rewrite_linear(const LieAlgebra& L, const Vector& x, const Vector& y, const NCPoly& p);
XYXPoly xyx_rewrite_recursive(const LieAlgebra& L, const Vector& x, const Vector& y, const NCPoly& p);

}  // namespace liepm
