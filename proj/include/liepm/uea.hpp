#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepm/certificate.hpp"
#include "liepm/lie_algebra.hpp"

namespace liepm {

/// Sequence of basis indices; the empty word is the unit.
using Word = std::vector<std::uint32_t>;
/// Exponent vector (m_1, ..., m_dim) of the ordered monomial b_1^m_1 ... b_dim^m_dim.
using Exponents = std::vector<std::uint32_t>;

/// Element of the free associative algebra on `letters` generators.
class NCPoly {
public:
    explicit NCPoly(std::size_t letters = 0) : letters_(letters) {}

    static NCPoly unit(std::size_t letters);
    static NCPoly word(std::size_t letters, Word w, const Scalar& c = 1);
    /// Degree-one element sum v_i b_i.
    static NCPoly embed(const Vector& v);

    std::size_t letters() const noexcept { return letters_; }
    const SparseVector<Word>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Highest word length; 0 for the zero polynomial.
    std::size_t degree() const;

    void add(const Word& w, const Scalar& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Scalar& c, NCPoly p);
    /// Concatenation product.
    friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
    friend bool operator==(const NCPoly& a, const NCPoly& b) = default;

private:
    std::size_t letters_;
    SparseVector<Word> terms_;
};

NCPoly nc_multiply(const NCPoly& p, const NCPoly& q);
/// n-fold product of the degree-one element v; power(v, 0) is the unit.
NCPoly power(const Vector& v, std::size_t n);
NCPoly embed(const Vector& v);

/// Canonical element of U(L): sparse map from PBW exponent vectors.
class PBWPoly {
public:
    explicit PBWPoly(std::size_t dim = 0) : dim_(dim) {}

    static PBWPoly unit(std::size_t dim);
    static PBWPoly monomial(Exponents e, const Scalar& c = 1);

    std::size_t dim() const noexcept { return dim_; }
    const SparseVector<Exponents>& terms() const noexcept { return terms_; }
    SparseVector<Exponents>& mutable_terms() noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t degree() const;
    /// Terms of total degree exactly d.
    PBWPoly homogeneous_part(std::size_t d) const;

    void add(const Exponents& e, const Scalar& c);

    PBWPoly& operator+=(const PBWPoly& o);
    PBWPoly& operator-=(const PBWPoly& o);
    friend PBWPoly operator+(PBWPoly a, const PBWPoly& b) { return a += b; }
    friend PBWPoly operator-(PBWPoly a, const PBWPoly& b) { return a -= b; }
    friend PBWPoly operator*(const Scalar& c, PBWPoly p);
    friend bool operator==(const PBWPoly& a, const PBWPoly& b) = default;

    /// As an element of the free algebra: each monomial becomes its ordered word.
    NCPoly to_ncpoly() const;

private:
    std::size_t dim_;
    SparseVector<Exponents> terms_;
};

std::size_t total_degree(const Exponents& e);

/// `c * b1^m1 ... bd^md` terms joined by " + ", in lexicographic exponent order.
std::string format(const LieAlgebra& L, const PBWPoly& p);
std::string format(const LieAlgebra& L, const NCPoly& p);

/// PBW straightening for one Lie algebra.
///
/// A word is normalized right to left: each letter is multiplied onto an
/// already ordered polynomial, and a letter b_j meeting a smaller b_i is moved
/// right by b_j b_i -> b_i b_j + [b_j, b_i]. This always rewrites the leftmost
/// misordered pair. Products (letter, ordered monomial) are memoized. A
/// Normalizer owns its memo; share one per thread.
class Normalizer {
public:
    explicit Normalizer(const LieAlgebra& L) : L_(&L) {}
    /// Keeps a pointer to L, so L must outlive the normalizer.
    explicit Normalizer(LieAlgebra&&) = delete;

    const LieAlgebra& algebra() const noexcept { return *L_; }

    PBWPoly normal_form(const NCPoly& p);
    PBWPoly normal_form(const Word& w);
    /// b_letter * p for ordered p.
    PBWPoly left_multiply(std::uint32_t letter, const PBWPoly& p);
    /// v * p for a degree-one element v.
    PBWPoly left_multiply(const Vector& v, const PBWPoly& p);
    /// Product of two ordered polynomials.
    PBWPoly multiply(const PBWPoly& a, const PBWPoly& b);
    /// nf(v^n).
    PBWPoly power(const Vector& v, std::size_t n);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    const PBWPoly& left_multiply_monomial(std::uint32_t letter, const Exponents& m);

    const LieAlgebra* L_;
    std::map<std::pair<std::uint32_t, Exponents>, PBWPoly> memo_;
};

PBWPoly pbw_normal_form(const LieAlgebra& L, const NCPoly& p);

/// Passes iff both sides have the same normal form; a failure carries the
/// normal form of lhs - rhs.
Certificate verify_identity(const LieAlgebra& L, const NCPoly& lhs, const NCPoly& rhs);
Certificate verify_identity(Normalizer& nf, const NCPoly& lhs, const NCPoly& rhs);

/// Number of PBW monomials of total degree <= d in dim variables: C(d+dim, dim).
std::size_t pbw_count(std::size_t dim, std::size_t d);
/// All exponent vectors of total degree <= d, in lexicographic order.
std::vector<Exponents> pbw_monomials(std::size_t dim, std::size_t d);

}  // namespace liepm
