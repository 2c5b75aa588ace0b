#include "liepm/random.hpp"

#include "liepm/constructors.hpp"

namespace liepm {

long Rng::small_int(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(engine_);
}

Scalar Rng::small_rational() {
    const long p = small_int(-3, 3);
    const long q = small_int(1, 3);
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

Vector Rng::vector(std::size_t n) {
    Vector v(n);
    for (auto& c : v) {
        c = small_int();
    }
    return v;
}

Vector Rng::nonzero_vector(std::size_t n) {
    while (true) {
        Vector v = vector(n);
        if (!is_zero(v)) {
            return v;
        }
    }
}

Matrix Rng::invertible_matrix(std::size_t n) {
    while (true) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = small_int();
            }
        }
        if (determinant(m) != 0) {
            return m;
        }
    }
}

std::size_t Rng::index(std::size_t n) { return static_cast<std::size_t>(small_int(0, static_cast<long>(n) - 1)); }

namespace {

Scalar nonzero_rational(Rng& rng) {
    while (true) {
        Scalar s = rng.small_rational();
        if (s != 0) {
            return s;
        }
    }
}

}  // namespace

RandomAlgebra random_lie_algebra_3d(Rng& rng) {
    RandomAlgebra out;
    switch (rng.index(8)) {
        case 0:
            out = {abelian(3), "abelian"};
            break;
        case 1:
            out = {heisenberg(), "heisenberg"};
            break;
        case 2:
            out = {jacobson_case('c'), "jacobson_c"};
            break;
        case 3: {
            const Scalar a = nonzero_rational(rng);
            out = {k_family(a, a), "g_special"};
            break;
        }
        case 4: {
            const Scalar a = rng.small_rational();
            Scalar b = rng.small_rational();
            while (a == 0 && b == 0) {
                b = rng.small_rational();
            }
            out = {k_family(a, b), a == b ? "g_special" : "k_family"};
            break;
        }
        case 5: {
            while (true) {
                std::vector<Scalar> p{rng.small_rational(), rng.small_rational(), rng.small_rational(),
                                      rng.small_rational()};
                if (p[0] * p[3] - p[1] * p[2] != 0) {
                    const bool scalar = p[1] == 0 && p[2] == 0 && p[0] == p[3];
                    out = {jacobson_case('d', p), scalar ? "g_special" : "jacobson_d"};
                    break;
                }
            }
            break;
        }
        case 6:
            out = {jacobson_case('e', {nonzero_rational(rng), nonzero_rational(rng)}), "jacobson_e"};
            break;
        default:
            out = {a_family(rng.small_rational()), "a_family"};
            break;
    }
    out.algebra = change_basis(out.algebra, rng.invertible_matrix(3));
    return out;
}

RandomAlgebra random_lie_algebra_4d(Rng& rng) {
    const std::vector<std::string> names{"t", "u", "v", "w"};
    std::vector<std::tuple<std::size_t, std::size_t, Vector>> br;
    std::string family;
    switch (rng.index(3)) {
        case 0: {
            // [t, v_j] = sum_i A_ij v_i on an abelian ideal.
            for (std::size_t j = 1; j < 4; ++j) {
                Vector col = zero_vector(4);
                for (std::size_t i = 1; i < 4; ++i) {
                    col[i] = rng.small_int();
                }
                br.emplace_back(0, j, col);
            }
            family = "abelian_extension";
            break;
        }
        case 1: {
            // Heisenberg ideal (u, v, w), [u,v] = w, derivation D with D w = tr(D|uv) w.
            const long a = rng.small_int(), b = rng.small_int(), c = rng.small_int();
            const long d = rng.small_int(), e = rng.small_int(), f = rng.small_int();
            br.emplace_back(1, 2, Vector{0, 0, 0, 1});
            br.emplace_back(0, 1, Vector{0, a, b, c});
            br.emplace_back(0, 2, Vector{0, d, e, f});
            br.emplace_back(0, 3, Vector{0, 0, 0, a + e});
            family = "heisenberg_extension";
            break;
        }
        default: {
            // sl2 on (u, v, w) = (e, h, f), t central.
            br.emplace_back(1, 3, Vector{0, 0, 1, 0});
            br.emplace_back(2, 1, Vector{0, 2, 0, 0});
            br.emplace_back(2, 3, Vector{0, 0, 0, -2});
            family = "gl2";
            break;
        }
    }
    LieAlgebra base = LieAlgebra::from_brackets("random4d", names, br);
    return {change_basis(base, rng.invertible_matrix(4)), family};
}

}  // namespace liepm
