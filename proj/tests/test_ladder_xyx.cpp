#include "doctest.h"
#include "liepm/constructors.hpp"
#include "liepm/errors.hpp"
#include "liepm/ladder.hpp"
#include "liepm/xyx.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace liepm;
using namespace liepm::testing;

namespace {

// y x y^k - k/(k+1) x y^(k+1) - 1/(k+1) y^(k+1) x by naive rewriting.
PBWPoly naive_ak(const LieAlgebra& L, const Vector& x, const Vector& y, long k) {
    const Scalar K(k);
    const NCPoly p = embed(y) * embed(x) * power(y, k) - Scalar(K / (K + 1)) * embed(x) * power(y, k + 1) -
                     Scalar(1 / (K + 1)) * power(y, k + 1) * embed(x);
    return naive_normal_form(L, p);
}

std::vector<PBWPoly> xyx_columns(const LieAlgebra& L, const Vector& x, const Vector& y, std::size_t d) {
    std::vector<PBWPoly> out;
    for (std::size_t n = 0; n <= d; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                const std::size_t k = n - i - j;
                if (j == 0 && k != 0) {
                    continue;
                }
                out.push_back(naive_normal_form(L, xyx_word(x, y, i, j, k)));
            }
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("ladder") {

TEST_CASE("A_k corrections match naive rewriting") {
    for (const auto& c : named_three_dimensional()) {
        Normalizer nf(c.algebra);
        for (long k = 0; k <= 4; ++k) {
            CAPTURE(c.name);
            CAPTURE(k);
            CHECK(ak_correction(nf, c.x, c.y, k) == naive_ak(c.algebra, c.x, c.y, k));
        }
    }
}

TEST_CASE("sl2 corrections are k f^k") {
    const LieAlgebra L = sl2();
    Normalizer nf(L);
    const Vector e = unit_vector(3, 0), f = unit_vector(3, 2);
    for (std::uint32_t k = 0; k <= 5; ++k) {
        PBWPoly want(3);
        want.add({0, 0, k}, Scalar(k));
        if (k == 0) {
            want = PBWPoly(3);
        }
        CHECK(ak_correction(nf, e, f, k) == want);
        CHECK(bk_correction(nf, e, f, k) == want);
    }
}

TEST_CASE("Heisenberg corrections vanish and the ladder check passes") {
    const Vector x = unit_vector(3, 0), y = unit_vector(3, 1);
    const LieAlgebra L = heisenberg();
    Normalizer nf(L);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(ak_correction(nf, x, y, k).is_zero());
        CHECK(bk_correction(nf, x, y, k).is_zero());
    }
    const Certificate c = check_ak_bk(heisenberg(), x, y, 8);
    CHECK(c.verdict);
    CHECK(c.details.at("corrections_within_filtration_degree_k") == "yes");
}

TEST_CASE("sl2 ladder check fails at k = 1 with the correction outside U_1") {
    const Certificate c = check_ak_bk(sl2(), unit_vector(3, 0), unit_vector(3, 2), 4);
    CHECK_FALSE(c.verdict);
    REQUIRE_FALSE(c.witnesses.empty());
    CHECK(c.witnesses.front() == "A_1: correction 1 * f is not in U_1");
    CHECK(c.details.at("k=0") == "A ok, B ok, C ok");
    CHECK(c.details.at("corrections_within_filtration_degree_k") == "yes");
}

TEST_CASE("U_k has rank 2k + 1 in sl2") {
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(uk_subspace(sl2(), unit_vector(3, 0), unit_vector(3, 2), k).rank() == 2 * k + 1);
    }
}

}

TEST_SUITE("xyx") {

TEST_CASE("canonical keys and counts") {
    CHECK(canonical({2, 0, 3}) == XYXMonomial{5, 0, 0});
    CHECK(canonical({2, 1, 3}) == XYXMonomial{2, 1, 3});
    CHECK(xyx_monomial_count(0) == 1);
    CHECK(xyx_monomial_count(2) == 7);
    CHECK(xyx_monomial_count(5) == 41);
}

TEST_CASE("rank agrees with a dense oracle") {
    for (const auto& c : named_three_dimensional()) {
        XyxRewriter rw(c.algebra, c.x, c.y);
        for (std::size_t d = 0; d <= 4; ++d) {
            CAPTURE(c.name);
            CAPTURE(d);
            const auto cols = xyx_columns(c.algebra, c.x, c.y, d);
            CHECK(cols.size() == xyx_monomial_count(d));
            CHECK(rw.rank(d) == dense_rank(cols, 3, d));
            CHECK(rw.rank(d) + rw.free_variables(d) == xyx_monomial_count(d));
        }
    }
}

TEST_CASE("frozen XYX ranks") {
    const LieAlgebra L = sl2();
    XyxRewriter rw(L, unit_vector(3, 0), unit_vector(3, 2));
    const std::size_t want[] = {1, 3, 7, 13, 22, 34};
    for (std::size_t d = 0; d <= 5; ++d) {
        CHECK(rw.rank(d) == want[d]);
    }
    CHECK(rw.covered(5, 9) < pbw_count(3, 5));
    CHECK(rw.covered(5, 10) == pbw_count(3, 5));
}

TEST_CASE("both rewriters round-trip") {
    Rng rng(21);
    for (const auto& c : named_three_dimensional()) {
        XyxRewriter rw(c.algebra, c.x, c.y);
        for (int t = 0; t < 10; ++t) {
            const NCPoly p = random_element(rng, 3, 4);
            const PBWPoly want = naive_normal_form(c.algebra, p);
            CAPTURE(c.name);
            const XYXPoly a = rw.rewrite_linear(p);
            const XYXPoly b = rw.rewrite_recursive(p);
            CHECK(naive_normal_form(c.algebra, a.to_ncpoly()) == want);
            CHECK(naive_normal_form(c.algebra, b.to_ncpoly()) == want);
        }
    }
}

TEST_CASE("recursive rewriter on small words") {
    const LieAlgebra L = sl2();
    XyxRewriter rw(L, unit_vector(3, 0), unit_vector(3, 2));
    // h = e f - f e
    const XYXPoly h = rw.rewrite_recursive(NCPoly::embed(unit_vector(3, 1)));
    SparseVector<XYXMonomial> want;
    want[{1, 1, 0}] = 1;
    want[{0, 1, 1}] = -1;
    CHECK(h.terms == want);
}

TEST_CASE("rejects non-generating pairs and wrong dimensions") {
    const LieAlgebra s = sl2(), g = g_special(), t = sl3_chevalley();
    CHECK_THROWS_AS(XyxRewriter(s, unit_vector(3, 0), unit_vector(3, 1)), NotGenerating);
    CHECK_THROWS_AS(XyxRewriter(g, unit_vector(3, 0), unit_vector(3, 1)), NotGenerating);
    CHECK_THROWS_AS(XyxRewriter(t, unit_vector(8, 0), unit_vector(8, 5)), DimensionMismatch);
}

TEST_CASE("formatting") {
    const LieAlgebra L = sl2();
    XYXPoly p{unit_vector(3, 0), unit_vector(3, 2), {}};
    p.terms[{1, 2, 0}] = Scalar(1, 2);
    CHECK(format(L, p) == "1/2 * (e) (f)^2");
}

}
