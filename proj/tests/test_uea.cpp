#include "doctest.h"
#include "liepm/constructors.hpp"
#include "liepm/random.hpp"
#include "liepm/uea.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace liepm;
using namespace liepm::testing;

namespace {

NCPoly word(std::size_t n, Word w, Scalar c = 1) { return NCPoly::word(n, std::move(w), c); }

}  // namespace

TEST_SUITE("uea") {

TEST_CASE("small normal forms in sl2") {
    const LieAlgebra L = sl2();
    // e = 0, h = 1, f = 2
    PBWPoly fe(3);
    fe.add({1, 0, 1}, 1);
    fe.add({0, 1, 0}, -1);
    CHECK(pbw_normal_form(L, word(3, {2, 0})) == fe);
    CHECK(format(L, pbw_normal_form(L, word(3, {2, 0}))) == "-1 * h + 1 * e f");
    PBWPoly he(3);
    he.add({1, 1, 0}, 1);
    he.add({1, 0, 0}, 2);
    CHECK(pbw_normal_form(L, word(3, {1, 0})) == he);
}

TEST_CASE("normal form agrees with naive rewriting") {
    Rng rng(11);
    for (const LieAlgebra& L : {sl2(), heisenberg(), g_special(), a_family(Scalar(2)), sl3_chevalley()}) {
        Normalizer nf(L);
        for (int t = 0; t < 15; ++t) {
            const NCPoly p = random_element(rng, L.dim(), L.dim() > 3 ? 4 : 6);
            CAPTURE(L.name());
            CHECK(nf.normal_form(p) == naive_normal_form(L, p));
        }
    }
}

TEST_CASE("normal form is idempotent and linear") {
    Rng rng(12);
    const LieAlgebra L = sl2();
    Normalizer nf(L);
    for (int t = 0; t < 20; ++t) {
        const NCPoly p = random_element(rng, 3, 5);
        const NCPoly q = random_element(rng, 3, 5);
        const PBWPoly n = nf.normal_form(p);
        CHECK(nf.normal_form(n.to_ncpoly()) == n);
        CHECK(nf.normal_form(p + Scalar(3) * q) == n + Scalar(3) * nf.normal_form(q));
    }
}

TEST_CASE("filtration degree never grows and the top symbol survives") {
    Rng rng(13);
    for (const LieAlgebra& L : {sl2(), heisenberg(), g_special()}) {
        Normalizer nf(L);
        for (int t = 0; t < 20; ++t) {
            Word w(1 + rng.index(6));
            for (auto& l : w) {
                l = static_cast<std::uint32_t>(rng.index(3));
            }
            const PBWPoly n = nf.normal_form(w);
            CHECK(n.degree() == w.size());
            Exponents top(3, 0);
            for (auto l : w) {
                ++top[l];
            }
            const PBWPoly lead = n.homogeneous_part(w.size());
            REQUIRE(lead.terms().size() == 1);
            CHECK(lead.terms().begin()->first == top);
            CHECK(lead.terms().begin()->second == 1);
        }
    }
}

TEST_CASE("multiplication is associative in U(L)") {
    Rng rng(14);
    const LieAlgebra L = a_family(Scalar(-1, 4));
    Normalizer nf(L);
    for (int t = 0; t < 15; ++t) {
        const PBWPoly a = nf.normal_form(random_element(rng, 3, 3));
        const PBWPoly b = nf.normal_form(random_element(rng, 3, 3));
        const PBWPoly c = nf.normal_form(random_element(rng, 3, 3));
        CHECK(nf.multiply(nf.multiply(a, b), c) == nf.multiply(a, nf.multiply(b, c)));
    }
}

TEST_CASE("uv - vu = [u, v] for degree-one elements") {
    Rng rng(15);
    const LieAlgebra L = sl3_chevalley();
    for (int t = 0; t < 10; ++t) {
        const Vector u = rng.vector(8), v = rng.vector(8);
        const Certificate c = verify_identity(L, embed(u) * embed(v) - embed(v) * embed(u), embed(bracket(L, u, v)));
        CHECK(c.verdict);
    }
}

TEST_CASE("verify_identity reports the difference") {
    const LieAlgebra L = sl2();
    const Certificate c = verify_identity(L, word(3, {0, 2}), word(3, {2, 0}));
    CHECK_FALSE(c.verdict);
    REQUIRE_FALSE(c.witnesses.empty());
    CHECK(c.witnesses.front().find("h") != std::string::npos);
}

TEST_CASE("sl2 straightening of f through e^i f^j e^k") {
    const LieAlgebra L = sl2();
    const Vector e = unit_vector(3, 0), f = unit_vector(3, 2);
    Normalizer nf(L);
    for (long i = 1; i <= 5; ++i) {
        for (long j = 0; j <= 4; ++j) {
            for (long k = 0; k <= 4; ++k) {
                const Scalar J(j + 1);
                const NCPoly rhs = Scalar(Scalar(j - i + 1) / J) * xyx_word(e, f, i, j + 1, k) +
                                   Scalar(Scalar(i) / J) * xyx_word(e, f, i - 1, j + 1, k + 1) +
                                   Scalar(i * (j - i + 1)) * xyx_word(e, f, i - 1, j, k);
                CHECK(verify_identity(nf, embed(f) * xyx_word(e, f, i, j, k), rhs).verdict);
            }
        }
    }
}

TEST_CASE("Heisenberg straightening of y through x^i y^j x^k") {
    const LieAlgebra L = heisenberg();
    const Vector x = unit_vector(3, 0), y = unit_vector(3, 1);
    Normalizer nf(L);
    for (long i = 1; i <= 5; ++i) {
        for (long j = 0; j <= 4; ++j) {
            for (long k = 0; k <= 4; ++k) {
                const Scalar J(j + 1);
                const NCPoly rhs = Scalar(Scalar(j - i + 1) / J) * xyx_word(x, y, i, j + 1, k) +
                                   Scalar(Scalar(i) / J) * xyx_word(x, y, i - 1, j + 1, k + 1);
                CHECK(verify_identity(nf, embed(y) * xyx_word(x, y, i, j, k), rhs).verdict);
            }
        }
    }
}

TEST_CASE("PBW monomial counts") {
    CHECK(pbw_count(3, 4) == 35);
    CHECK(pbw_count(3, 5) == 56);
    CHECK(pbw_count(8, 3) == 165);
    CHECK(pbw_monomials(3, 2).size() == 10);
    CHECK(pbw_monomials(2, 0) == std::vector<Exponents>{{0, 0}});
}

}
