#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "liepm/certificate.hpp"
#include "liepm/matrix.hpp"
#include "liepm/scalar.hpp"

namespace liepm {

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// The table is stored as given; nothing is symmetrized, so a malformed input
/// survives construction and is reported by check_axioms.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// table[i * dim + j] is the coordinate vector of [b_i, b_j].
    LieAlgebra(std::string name, std::vector<std::string> basis, std::vector<Vector> table);

    /// Builds from a list of brackets [b_i, b_j] = v; the antisymmetric partner
    /// is filled in and unlisted brackets are zero. Conflicting entries throw.
    static LieAlgebra from_brackets(std::string name, std::vector<std::string> basis,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets);

    /// Lie algebra spanned by linearly independent matrices, with the
    /// commutator bracket. Throws if the span is not closed.
    static LieAlgebra from_matrices(std::string name, std::vector<std::string> basis,
                                    const std::vector<Matrix>& matrices);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis_names() const noexcept { return basis_; }
    std::optional<std::size_t> index_of(std::string_view symbol) const;

    const Vector& structure(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    Vector unit(std::size_t i) const { return unit_vector(dim(), i); }

    /// Renders a vector as a linear combination of basis symbols.
    std::string format(const Vector& v) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Vector> table_;
};

/// Subspace of Q^n in reduced row echelon form. Two subspaces are equal iff
/// their canonical forms are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), rref_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rref_.rows(); }
    const Matrix& rref() const noexcept { return rref_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<Vector> basis() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(); nullopt when v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// Deterministic complement of *this inside `outer`, spanned by the rref
    /// rows of `outer` that enlarge the span when added in order.
    Subspace complement_in(const Subspace& outer) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix rref_;
    std::vector<std::size_t> pivots_;
};

/// Z^n grading given on the basis: basis vector i has degree degrees[i].
struct Grading {
    std::size_t rank = 0;
    std::vector<std::vector<long long>> degrees;

    /// Span of the basis vectors of degree alpha.
    Subspace component(const std::vector<long long>& alpha, std::size_t dim) const;
    /// Distinct degrees carried by at least one basis vector, sorted.
    std::vector<std::vector<long long>> support() const;
};

enum class Sign { negative, zero, positive };

/// Sign of the last nonzero coordinate.
Sign positivity(std::span<const long long> alpha);

Vector bracket(const LieAlgebra& L, const Vector& u, const Vector& v);
/// ad u as a matrix acting on column vectors: (ad u) v = [u, v].
Matrix ad_matrix(const LieAlgebra& L, const Vector& u);

Certificate check_axioms(const LieAlgebra& L);
Certificate check_grading(const LieAlgebra& L, const Grading& g);

Subspace derived_subalgebra(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L);
/// Smallest bracket-closed subspace containing gens.
Subspace generated_subalgebra(const LieAlgebra& L, const std::vector<Vector>& gens);

/// Transports the structure constants to the basis given by the columns of T.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& T);
/// The subalgebra S as a Lie algebra on basis S.basis().
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S, std::string name = {});

/// sigma maps b_j to its column j; true iff sigma[u,v] = [sigma u, sigma v].
bool is_homomorphism(const LieAlgebra& L, const Matrix& sigma);

}  // namespace liepm
