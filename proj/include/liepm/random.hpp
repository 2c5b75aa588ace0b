#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "liepm/lie_algebra.hpp"

namespace liepm {

/// Seeded source for every randomized check. Entries are drawn from {-3..3}.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    long small_int(long lo = -3, long hi = 3);
    Scalar small_rational();   // p/q with p in {-3..3}, q in {1..3}
    Vector vector(std::size_t n);
    Vector nonzero_vector(std::size_t n);
    Matrix invertible_matrix(std::size_t n);
    std::size_t index(std::size_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// A random three-dimensional Lie algebra: a random representative of one of
/// the structural families (abelian, Heisenberg, case c, K(a,b) including a = b,
/// a general case-d matrix, case e, A(r)) transported by a random basis change.
struct RandomAlgebra {
    LieAlgebra algebra;
    std::string family;
};
RandomAlgebra random_lie_algebra_3d(Rng& rng);

/// A random four-dimensional Lie algebra: F t semidirect an abelian or
/// Heisenberg ideal with a random derivation, or sl2 + F, then a random basis
/// change.
RandomAlgebra random_lie_algebra_4d(Rng& rng);

}  // namespace liepm
