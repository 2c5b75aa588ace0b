#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "liepm/certificate.hpp"
#include "liepm/lie_algebra.hpp"

namespace liepm {

/// Jacobson case of a three-dimensional Lie algebra.
///   a: abelian; b: L' one-dimensional and central; c: L' one-dimensional,
///   not central; d: dim L' = 2; e: L' = L.
struct JacobsonCase {
    char tag = 'a';
    /// Case d: basis (u, v) of L', a complement element z, and the matrix N of
    /// ad z restricted to L' in that basis (column j = [z, basis j]).
    std::vector<Vector> derived_basis;
    std::optional<Vector> complement;
    std::optional<Matrix> ad_action;
};

/// Throws DimensionMismatch unless dim L = 3.
JacobsonCase classify_jacobson(const LieAlgebra& L);

struct PairDecision {
    bool has_pair = false;
    /// Generators x, y with (F x, F y) a plus-minus pair.
    std::optional<std::pair<Vector, Vector>> witness;
};

/// false exactly for abelian L and L isomorphic to g; otherwise a generating
/// pair built case by case.
PairDecision has_pm_pair(const LieAlgebra& L);

/// dim L' = 2, L' abelian and ad z acts on L' as a nonzero scalar.
bool is_isomorphic_to_g(const LieAlgebra& L);

/// Element of P(F): {0} or {u, 1/u} with u != 0, 1.
class PFClass {
public:
    static PFClass zero() { return PFClass(Scalar(0)); }
    /// Class of u; throws InvalidArgument for u = 1.
    static PFClass of(const Scalar& u);

    bool is_zero() const { return rep_ == 0; }
    /// 0, -1, or the member of {u, 1/u} with absolute value below 1.
    const Scalar& representative() const noexcept { return rep_; }
    std::string to_string() const;
    static PFClass parse(const std::string& text);

    friend bool operator==(const PFClass& a, const PFClass& b) = default;

private:
    explicit PFClass(Scalar rep) : rep_(std::move(rep)) {}
    Scalar rep_;
};

struct KInvariant {
    /// Empty when a = b, which is g rather than a member of the family.
    std::optional<PFClass> cls;
    bool is_g = false;
};

/// Class of K(a, b). Throws InvalidArgument for a = b = 0.
KInvariant k_invariant(const Scalar& a, const Scalar& b);

/// PFClass of L when L is isomorphic over Q to some K(a, b) with a != b.
std::optional<PFClass> k_class(const LieAlgebra& L);

/// Point of P^1(Q); an empty value is infinity.
struct RClass {
    std::optional<Scalar> r;

    static RClass infinity() { return RClass{}; }
    bool is_infinity() const noexcept { return !r.has_value(); }
    std::string to_string() const;
    static RClass parse(const std::string& text);

    friend bool operator==(const RClass& a, const RClass& b) = default;
};

bool a_isomorphic(const RClass& r, const RClass& s);

/// 2x2 similarity: equal characteristic polynomials and equal scalarity.
bool similar2(const Matrix& A, const Matrix& B);
/// Some nonzero a with A similar to a B, if one exists.
std::optional<Scalar> similar2_up_to_scalar(const Matrix& A, const Matrix& B);

struct KToA {
    RClass r;
    /// Set when diag(-u, -1) is not similar to any multiple of the companion
    /// matrix [[0, r], [1, 1]]; this happens exactly at u = 1.
    bool anomaly = false;
};

/// r = -u/(u+1)^2 for u != -1 and infinity for u = -1. Throws for u = 0.
KToA k_to_a(const Scalar& u);

struct RegularClass {
    enum class Kind { sl2, heisenberg, a, not_certified };
    Kind kind = Kind::not_certified;
    std::optional<RClass> r;
    /// Why NOT_CERTIFIED, or the rational sl2-triple found for SL2.
    std::string note;

    std::string to_string() const;
    static RegularClass parse(const std::string& text);

    friend bool operator==(const RegularClass& a, const RegularClass& b) {
        return a.kind == b.kind && a.r == b.r;
    }
};

/// Which of sl2, H, A(r) the algebra is over Q, when that is rationally
/// witnessed. dim L' = 2 with ad z = N on L': A(-det N/tr N^2) when tr N != 0,
/// A(infinity) when tr N = 0 and -det N is a rational square. Case e is SL2
/// once a split element u (ad u with rational nonzero eigenvalues) turns up
/// among the coordinate vectors with entries in {-3..3}.
RegularClass regular_class(const LieAlgebra& L);

/// An sl2-triple (e, h, f) of L with [h,e] = 2e, [h,f] = -2f, [e,f] = h, if a
/// split element with small integer coordinates exists.
std::optional<std::vector<Vector>> find_sl2_triple(const LieAlgebra& L);

struct ThreeGraded {
    enum class Kind { sl2, heisenberg, k, no_pair };
    Kind kind = Kind::no_pair;
    /// K(a, b) normal form: [x, z] = a x, [y, z] = b y.
    std::optional<std::pair<Scalar, Scalar>> ab;
    std::string reason;
    /// verify_pm_pair for (L_1, L_-1).
    Certificate pair;
};

/// L = L_-1 + L_0 + L_1 with one-dimensional components. Throws
/// InvalidArgument for any other grading shape.
ThreeGraded three_graded_classify(const LieAlgebra& L, const Grading& grading, unsigned d = 4);

struct ClassificationReport {
    char jacobson_case = 'a';
    bool has_pair = false;
    std::optional<std::pair<Vector, Vector>> witness;
    std::optional<PFClass> pf_class;
    std::optional<RClass> r_class;
    RegularClass regular_class;
    std::vector<std::string> anomaly_flags;

    friend bool operator==(const ClassificationReport& a, const ClassificationReport& b) = default;
};

ClassificationReport classify(const LieAlgebra& L);
nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const LieAlgebra& L, const ClassificationReport& r);

}  // namespace liepm
