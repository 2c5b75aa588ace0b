#include "doctest.h"
#include "liepm/constructors.hpp"
#include "liepm/errors.hpp"
#include "liepm/schemes.hpp"
#include "liepm/span.hpp"

using namespace liepm;

namespace {

Subspace line(const Vector& v) { return Subspace::span(v.size(), {v}); }

FactorizationScheme efe() {
    return {{line(unit_vector(3, 0)), line(unit_vector(3, 2)), line(unit_vector(3, 0))}, {"e", "f", "e"}};
}

Certificate without_time(Certificate c) {
    c.elapsed_ms = 0;
    return c;
}

}  // namespace

TEST_SUITE("span") {

TEST_CASE("sl2 = U(Fe) U(Ff) U(Fe) through degree 4") {
    const Certificate c = span_certificate(sl2(), efe(), 4);
    CHECK(c.verdict);
    CHECK(*c.rank == 35);
    CHECK(*c.target == 35);
}

TEST_CASE("abelian (Fx, Fy, Fx) misses four monomials at degree 2") {
    const FactorizationScheme s{{line(unit_vector(3, 0)), line(unit_vector(3, 1)), line(unit_vector(3, 0))}, {}};
    const Certificate c = span_certificate(abelian(3), s, 2);
    CHECK_FALSE(c.verdict);
    CHECK(*c.rank == 6);
    CHECK(*c.target == 10);
    CHECK(c.details.at("missing_dimension") == "4");
    CHECK(c.witnesses.size() == 4);
    for (const auto& w : c.witnesses) {
        CHECK(w.find('z') != std::string::npos);
    }
}

TEST_CASE("serial and parallel execution give identical certificates") {
    const LieAlgebra L = sl3_chevalley();
    const FactorizationScheme s = borcherds_scheme(L, sl3_triangular(), {1}, {2});
    const auto products = enumerate_products(s, 3);
    CHECK(normalize_products(L, s, products, Execution::serial) ==
          normalize_products(L, s, products, Execution::parallel));
    CHECK(without_time(span_certificate(L, s, 3, Execution::serial)) ==
          without_time(span_certificate(L, s, 3, Execution::parallel)));
}

TEST_CASE("a pass at degree d passes at every lower degree") {
    const FactorizationScheme xyx{{line(unit_vector(3, 0)), line(unit_vector(3, 1)), line(unit_vector(3, 0))}, {}};
    for (unsigned d = 0; d <= 4; ++d) {
        CHECK(span_certificate(heisenberg(), xyx, d).verdict);
    }
    const FactorizationScheme s{{line(unit_vector(3, 0)), line(unit_vector(3, 1)), line(unit_vector(3, 0))}, {}};
    for (unsigned d = 1; d <= 3; ++d) {
        CHECK_FALSE(span_certificate(abelian(3), s, d).verdict);
    }
}

TEST_CASE("product enumeration respects the degree budget") {
    const auto p = enumerate_products(efe(), 2);
    CHECK(p.size() == 10);
    for (const auto& prod : p) {
        std::size_t deg = 0;
        for (const auto& e : prod) {
            deg += total_degree(e);
        }
        CHECK(deg <= 2);
    }
}

TEST_CASE("factors must be subalgebras") {
    const FactorizationScheme s{{Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)})}, {"span(e,f)"}};
    const Certificate c = span_certificate(sl2(), s, 2);
    CHECK_FALSE(c.verdict);
    CHECK(c.witnesses.front() == "span(e,f) is not a subalgebra");
}

TEST_CASE("plus-minus pair checks") {
    CHECK(verify_pm_pair(sl2(), line(unit_vector(3, 0)), line(unit_vector(3, 2)), 3).verdict);
    const Certificate big = verify_pm_pair(sl2(), Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)}),
                                           line(unit_vector(3, 2)), 3);
    CHECK_FALSE(big.verdict);
    CHECK(big.witnesses.front() == "P + M = L");
    const Certificate nosub =
        verify_pm_pair(sl2(), Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}), line(unit_vector(3, 1)), 3);
    CHECK(nosub.witnesses.front() == "P is not a subalgebra");
    CHECK_FALSE(verify_pm_pair(g_special(), line(unit_vector(3, 0)), line(unit_vector(3, 2)), 3).verdict);
}

TEST_CASE("regular pair failure modes") {
    const Subspace P = line(unit_vector(3, 0)), M = line(unit_vector(3, 2));
    const Matrix good = Matrix::from_columns({unit_vector(3, 2), Scalar(-1) * unit_vector(3, 1), unit_vector(3, 0)}, 3);
    CHECK(verify_regular_pair(sl2(), P, M, good, 3).verdict);
    const Matrix swap = Matrix::from_columns({unit_vector(3, 2), unit_vector(3, 1), unit_vector(3, 0)}, 3);
    CHECK(verify_regular_pair(sl2(), P, M, swap, 3).witnesses.back() == "sigma does not preserve the bracket");
    CHECK(verify_regular_pair(sl2(), P, M, Matrix::identity(3), 3).witnesses.back() == "sigma(P) != M");
    // e -> 2f, f -> e/2 works as well.
    const Matrix scaled =
        Matrix::from_columns({Scalar(2) * unit_vector(3, 2), Scalar(-1) * unit_vector(3, 1), Scalar(1, 2) * unit_vector(3, 0)}, 3);
    CHECK(verify_regular_pair(sl2(), P, M, scaled, 3).verdict);
}

TEST_CASE("pair search is deterministic and finds nothing on g") {
    const Certificate a = search_pm_pair(sl2(), 3, 5);
    const Certificate b = search_pm_pair(sl2(), 3, 5);
    CHECK(without_time(a) == without_time(b));
    CHECK(a.details.at("mode") == "heuristic");
    CHECK_FALSE(search_pm_pair(g_special(), 3, 5).verdict);
}

}

TEST_SUITE("schemes") {

TEST_CASE("triangular schemes for sl3") {
    const LieAlgebra L = sl3_chevalley();
    const FactorizationScheme s = borcherds_scheme(L, sl3_triangular(), {}, {1, 2});
    CHECK(s.labels == std::vector<std::string>{"g-", "h''", "g+", "Ff1", "Ff2"});
    CHECK(s.factors[1].dim() == 0);
    CHECK(span_certificate(L, s, 2).verdict);
    CHECK_THROWS_AS(borcherds_scheme(L, sl3_triangular(), {1}, {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(borcherds_scheme(L, sl3_triangular(), {1}, {}), InvalidArgument);
}

TEST_CASE("rank-one Borcherds algebra with central h keeps h'' = 0") {
    const LieAlgebra L = borcherds_rank1_zero();
    const FactorizationScheme s = borcherds_scheme(L, borcherds_rank1_triangular(), {}, {1});
    CHECK(s.labels[1] == "h''");
    CHECK(s.factors[1].dim() == 0);
    CHECK(span_certificate(L, s, 3).verdict);
}

TEST_CASE("graded scheme hypotheses") {
    const LieAlgebra L = sl3_chevalley();
    const Grading g = sl3_root_grading();
    const ZGradedScheme z = zgraded_scheme(L, g, {1, 0}, 2);
    CHECK(z.hypotheses.verdict);
    CHECK(z.scheme.factors.size() == 4);
    CHECK(span_certificate(L, z.scheme, 2).verdict);
    CHECK(zgraded_scheme(L, g, {1, 1}, 2).hypotheses.verdict);

    auto failing = [](const LieAlgebra& A, const Grading& G, std::vector<long long> alpha) {
        try {
            zgraded_scheme(A, G, alpha, 2);
        } catch (const HypothesisFailed& e) {
            return e.hypothesis();
        }
        return std::string("none");
    };
    CHECK(failing(L, g, {0, 0}) == "alpha1");
    CHECK(failing(L, g, {2, 0}) == "Z alpha1 cap Delta = {0, +-alpha1}");
    CHECK(failing(abelian(3), heisenberg_grading(), {1}) == "[g_alpha1, g_-alpha1] != 0");
    Grading bad = g;
    bad.degrees[0] = {0, 0};
    CHECK(failing(L, bad, {1, 0}) == "grading");
}

TEST_CASE("graded parts") {
    const LieAlgebra L = sl3_chevalley();
    CHECK(graded_part(L, sl3_root_grading(), Sign::positive).dim() == 3);
    CHECK(graded_part(L, sl3_root_grading(), Sign::zero).dim() == 2);
    CHECK(graded_part(L, sl3_root_grading(), Sign::negative).dim() == 3);
}

}
