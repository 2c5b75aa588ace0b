#pragma once

#include <string>
#include <vector>

#include "liepm/constructors.hpp"
#include "liepm/random.hpp"
#include "liepm/uea.hpp"

namespace liepm::testing {

struct NamedPair {
    std::string name;
    LieAlgebra algebra;
    Vector x;
    Vector y;
};

/// sl2 (e, f), H (x, y), K(2,1) (x + y, z), A(0) and A(inf) (A + X, A - X).
inline std::vector<NamedPair> named_three_dimensional() {
    const Vector e = unit_vector(3, 0), f = unit_vector(3, 2);
    const Vector x = unit_vector(3, 0), y = unit_vector(3, 1), z = unit_vector(3, 2);
    const Vector plus{1, 1, 0}, minus{1, -1, 0};
    return {
        {"sl2", sl2(), e, f},
        {"H", heisenberg(), x, y},
        {"K(2,1)", k_family(2, 1), x + y, z},
        {"A(0)", a_family(Scalar(0)), plus, minus},
        {"A(inf)", a_family(std::nullopt), plus, minus},
    };
}

/// A few random words of length <= degree with small rational coefficients.
inline NCPoly random_element(Rng& rng, std::size_t letters, std::size_t degree, std::size_t terms = 3) {
    NCPoly p(letters);
    for (std::size_t t = 0; t < terms; ++t) {
        Word w(rng.index(degree + 1));
        for (auto& l : w) {
            l = static_cast<std::uint32_t>(rng.index(letters));
        }
        p.add(w, rng.small_rational());
    }
    return p;
}

/// x^i y^j x^k as a word polynomial; zero when an exponent is negative.
inline NCPoly xyx_word(const Vector& x, const Vector& y, long i, long j, long k) {
    if (i < 0 || j < 0 || k < 0) {
        return NCPoly(x.size());
    }
    return power(x, i) * power(y, j) * power(x, k);
}

}  // namespace liepm::testing
