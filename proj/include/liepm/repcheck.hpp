#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liepm/certificate.hpp"
#include "liepm/lie_algebra.hpp"

namespace liepm {

/// rho(b_i) for every basis element b_i of the algebra, all n x n.
struct Representation {
    LieAlgebra algebra;
    std::vector<Matrix> rho;

    std::size_t size() const { return rho.empty() ? 0 : rho.front().rows(); }
    /// rho(u) = sum u_i rho(b_i).
    Matrix act(const Vector& u) const;
};

/// Passes iff rho([b_i, b_j]) = [rho(b_i), rho(b_j)] for all i < j; the
/// first failing pair is the witness. Throws DimensionMismatch on ragged input.
Certificate verify_rep(const Representation& R);

/// (n+1)-dimensional irreducible sl2-module on v_0..v_n:
/// h v_i = (n - 2i) v_i, f v_i = (i + 1) v_(i+1), e v_i = (n - i + 1) v_(i-1).
Representation sl2_irrep(unsigned n);
Representation zero_representation(const LieAlgebra& L, std::size_t n);
Representation direct_sum(const Representation& a, const Representation& b);

/// Reads {"e": [["0","1"],["0","0"]], ...} keyed by basis symbol.
Representation representation_from_json(const LieAlgebra& L, const nlohmann::json& j);

bool is_nilpotent(const Matrix& A);

struct GeneratedSubmodule {
    Subspace span;
    /// dims[t] = dim span{x^i y^j x^k v : i + j + k <= t}.
    std::vector<std::size_t> dims;
    /// Two consecutive dimensions agreed within the degree bound.
    bool stabilized = false;
    /// The span is invariant under every rho(b_i).
    bool invariant = false;
};

/// span{rho(x)^i rho(y)^j rho(x)^k v : i + j + k <= d}.
GeneratedSubmodule generated_submodule(const Representation& R, const Vector& v, const Vector& x, const Vector& y,
                                       unsigned d);

struct SemisimpleResult {
    bool semisimple = false;
    /// Rational eigenvalues with multiplicity, descending.
    std::vector<Scalar> spectrum;
    /// Empty on success; otherwise "minimal polynomial not squarefree" or
    /// "irrational spectrum" (diagonalizable only over an extension).
    std::string reason;
    /// Minimal polynomial of h on S, constant term first.
    Vector minimal_polynomial;
};

/// Diagonalizability of h on S over Q. Throws InvalidArgument if S is not
/// h-invariant.
SemisimpleResult semisimple_on(const Matrix& h, const Subspace& S);

/// Minimal polynomial of a square matrix, monic, constant term first.
Vector minimal_polynomial(const Matrix& A);

/// For a representation of sl2 on (e, h, f) and n >= 0: a vector v with
/// f v = 0, e^n v != 0 and e^(n+1) v = 0 satisfies h(e^n v) = n e^n v, and
/// f e^n = e^n f - n e^(n-1)(h + n - 1) as matrices.
Certificate sl2_module_identities(const Representation& R, unsigned n);

/// The full suite on one module: verify_rep, nilpotence of every basis
/// element named in `nilpotent`, generated submodules from `samples` seeded
/// random vectors through (x, y), and semisimplicity of `semisimple` (if
/// given) on the whole module.
struct RepSuiteOptions {
    Vector x;
    Vector y;
    std::vector<std::string> nilpotent;
    std::optional<std::string> semisimple;
    unsigned degree = 6;
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};
Certificate rep_suite(const Representation& R, const RepSuiteOptions& opt);

}  // namespace liepm
