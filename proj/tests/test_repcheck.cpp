#include "doctest.h"
#include "liepm/constructors.hpp"
#include "liepm/errors.hpp"
#include "liepm/repcheck.hpp"

using namespace liepm;

TEST_SUITE("repcheck") {

TEST_CASE("irreducible sl2 modules are representations") {
    for (unsigned n = 0; n <= 6; ++n) {
        const Representation R = sl2_irrep(n);
        CHECK(R.size() == n + 1);
        CHECK(verify_rep(R).verdict);
        CHECK(is_nilpotent(R.rho[0]));
        CHECK(is_nilpotent(R.rho[2]));
        CHECK(sl2_module_identities(R, n).verdict);
    }
}

TEST_CASE("a broken module is caught") {
    Representation R = sl2_irrep(2);
    R.rho[1](0, 0) = 3;
    const Certificate c = verify_rep(R);
    CHECK_FALSE(c.verdict);
    CHECK(c.witnesses.front().find("rho([") == 0);
}

TEST_CASE("spectrum of h") {
    const Representation R = sl2_irrep(4);
    const SemisimpleResult s = semisimple_on(R.rho[1], Subspace::whole(5));
    CHECK(s.semisimple);
    CHECK(s.spectrum == std::vector<Scalar>{4, 2, 0, -2, -4});
}

TEST_CASE("non-semisimple and irrational cases") {
    const Matrix jordan{{1, 1}, {0, 1}};
    const SemisimpleResult j = semisimple_on(jordan, Subspace::whole(2));
    CHECK_FALSE(j.semisimple);
    CHECK(j.reason == "minimal polynomial not squarefree");
    const Matrix rot{{0, -1}, {1, 0}};
    const SemisimpleResult r = semisimple_on(rot, Subspace::whole(2));
    CHECK_FALSE(r.semisimple);
    CHECK(r.reason == "irrational spectrum");
    CHECK_THROWS_AS(semisimple_on(jordan, Subspace::span(2, {{0, 1}})), InvalidArgument);
}

TEST_CASE("minimal polynomials") {
    CHECK(minimal_polynomial(Matrix::identity(3)) == Vector{-1, 1});
    const Matrix jordan{{2, 1}, {0, 2}};
    CHECK(minimal_polynomial(jordan) == Vector{4, -4, 1});
    const Matrix diag{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
    CHECK(minimal_polynomial(diag) == Vector{2, -3, 1});
}

TEST_CASE("generated submodules") {
    const Representation R = direct_sum(sl2_irrep(2), sl2_irrep(1));
    const Vector e = unit_vector(3, 0), f = unit_vector(3, 2);
    const Vector v{0, 0, 0, 1, 0};
    const GeneratedSubmodule g = generated_submodule(R, v, e, f, 4);
    CHECK(g.span.dim() == 2);
    CHECK(g.invariant);
    CHECK(g.stabilized);
    const GeneratedSubmodule all = generated_submodule(R, {0, 1, 0, 1, 0}, e, f, 6);
    CHECK(all.span.dim() == 5);
}

TEST_CASE("representations from JSON") {
    const auto j = nlohmann::json::parse(R"({"e": [["0", "1"], ["0", "0"]], "h": [[1, 0], [0, -1]], "f": [[0, 0], [1, 0]]})");
    const Representation R = representation_from_json(sl2(), j);
    CHECK(R.size() == 2);
    CHECK(verify_rep(R).verdict);
    CHECK_THROWS(representation_from_json(sl2(), nlohmann::json::parse(R"({"e": [[0, 1], [0, 0]]})")));
    CHECK_THROWS_AS(representation_from_json(
                        sl2(), nlohmann::json::parse(R"({"e": [[0, 1]], "h": [[1, 0], [0, -1]], "f": [[0, 0], [1, 0]]})")),
                    DimensionMismatch);
    CHECK_THROWS_AS(representation_from_json(
                        sl2(), nlohmann::json::parse(R"({"e": [[0, 1], [0, 0]], "h": [[1]], "f": [[0, 0], [1, 0]]})")),
                    DimensionMismatch);
}

TEST_CASE("the full suite") {
    RepSuiteOptions opt;
    opt.x = unit_vector(3, 0);
    opt.y = unit_vector(3, 2);
    opt.nilpotent = {"e", "f"};
    opt.semisimple = "h";
    opt.degree = 7;
    const Certificate c = rep_suite(sl2_irrep(3), opt);
    CHECK(c.verdict);
    CHECK(c.details.at("spectrum h") == "{3, 1, -1, -3}");
    CHECK(*c.seed == 0);
}

}
