// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "liepm/classify3d.hpp"
#include "liepm/constructors.hpp"
#include "liepm/ladder.hpp"
#include "liepm/repcheck.hpp"
#include "liepm/schemes.hpp"
#include "liepm/span.hpp"
#include "liepm/xyx.hpp"
#include "support.hpp"

using namespace liepm;
using namespace liepm::testing;

namespace {

// Wall-clock limits in seconds.
constexpr double limit_identity_suite = 10.0;
constexpr double limit_xyx_per_algebra = 60.0;
constexpr double limit_section3_suite = 300.0;

constexpr unsigned pair_degree = 4;
constexpr std::size_t ladder_k_max = 8;
constexpr std::size_t xyx_degree = 5;
constexpr std::size_t xyx_samples = 100;
constexpr std::size_t random_3d_count = 20;
constexpr std::size_t random_4d_count = 5;
constexpr std::size_t basis_changes = 10;
constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(start);
    if (!o.pass) {
        ++failures;
    }
    std::printf("[%s] %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
}

Outcome identity_suite(const LieAlgebra& L, const Vector& x, const Vector& y, bool with_third_term) {
    const auto start = Clock::now();
    Normalizer nf(L);
    std::size_t ok = 0, total = 0;
    for (long i = 1; i <= 5; ++i) {
        for (long j = 0; j <= 4; ++j) {
            for (long k = 0; k <= 4; ++k) {
                const Scalar J(j + 1);
                NCPoly rhs = Scalar(Scalar(j - i + 1) / J) * xyx_word(x, y, i, j + 1, k) +
                             Scalar(Scalar(i) / J) * xyx_word(x, y, i - 1, j + 1, k + 1);
                if (with_third_term) {
                    rhs += Scalar(i * (j - i + 1)) * xyx_word(x, y, i - 1, j, k);
                }
                ++total;
                ok += verify_identity(nf, embed(y) * xyx_word(x, y, i, j, k), rhs).verdict;
            }
        }
    }
    const double s = seconds_since(start);
    std::ostringstream d;
    d << ok << "/" << total << " identities exact, " << s << "s (limit " << limit_identity_suite << "s)";
    return {ok == total && s < limit_identity_suite, d.str()};
}

Subspace line(const Vector& v) { return Subspace::span(v.size(), {v}); }

}  // namespace

int main() {
    std::printf("seed %llu\n", static_cast<unsigned long long>(seed));

    criterion(1, "sl2 straightening identity", [] {
        return identity_suite(sl2(), unit_vector(3, 0), unit_vector(3, 2), true);
    });

    criterion(2, "Heisenberg straightening identity", [] {
        return identity_suite(heisenberg(), unit_vector(3, 0), unit_vector(3, 1), false);
    });

    criterion(3, "A_k/B_k corrections lie in U_k, k <= 8", [] {
        std::vector<NamedPair> cases = named_three_dimensional();
        Rng rng(seed);
        for (std::size_t t = 0; t < random_4d_count; ++t) {
            RandomAlgebra r = random_lie_algebra_4d(rng);
            if (!check_axioms(r.algebra).verdict) {
                return Outcome{false, "random 4d algebra fails the axioms"};
            }
            cases.push_back({"random4d/" + r.family, r.algebra, rng.nonzero_vector(4), rng.nonzero_vector(4)});
        }
        std::ostringstream d;
        bool all = true, weak = true;
        for (auto& c : cases) {
            const Certificate cert = check_ak_bk(c.algebra, c.x, c.y, ladder_k_max);
            all = all && cert.verdict;
            weak = weak && cert.details.at("corrections_within_filtration_degree_k") == "yes";
            d << c.name << " " << (cert.verdict ? "pass" : "fail");
            if (!cert.verdict) {
                d << " [" << cert.witnesses.front() << "]";
            }
            d << "; ";
        }
        d << "corrections of filtration degree <= k everywhere: " << (weak ? "yes" : "no");
        return Outcome{all, d.str()};
    });

    criterion(4, "XYX monomials of degree <= 5 span with rank 56; rewriters round-trip and agree", [] {
        std::ostringstream d;
        bool all = true;
        Rng rng(seed);
        for (auto& c : named_three_dimensional()) {
            const auto start = Clock::now();
            XyxRewriter rw(c.algebra, c.x, c.y);
            const std::size_t rank = rw.rank(xyx_degree);
            const std::size_t target = pbw_count(3, xyx_degree);
            std::size_t column_degree = xyx_degree;
            while (rw.covered(xyx_degree, column_degree) < target && column_degree < 2 * xyx_degree + 2) {
                ++column_degree;
            }
            const bool spans = rw.covered(xyx_degree, column_degree) == target;
            std::size_t trips = 0, agree = 0;
            for (std::size_t s = 0; s < xyx_samples; ++s) {
                const NCPoly p = random_element(rng, 3, xyx_degree);
                const PBWPoly want = pbw_normal_form(c.algebra, p);
                const XYXPoly a = rw.rewrite_linear(p);
                const XYXPoly b = rw.rewrite_recursive(p);
                trips += rw.normal_form(a) == want && rw.normal_form(b) == want;
                agree += a == b;
            }
            const double sec = seconds_since(start);
            all = all && rank == target && trips == xyx_samples && agree == xyx_samples &&
                  sec < limit_xyx_per_algebra;
            d << c.name << ": rank " << rank << "/" << target << " (" << xyx_monomial_count(xyx_degree)
              << " distinct monomials, " << rw.free_variables(xyx_degree) << " dependent), U_<=5 "
              << (spans ? "spanned" : "not spanned") << " at XYX degree " << column_degree << ", round-trip "
              << trips << "/" << xyx_samples << ", coefficient agreement " << agree << "/" << xyx_samples << ", "
              << sec << "s; ";
        }
        return Outcome{all, d.str()};
    });

    criterion(5, "has_pm_pair matches non-abelian and not g; witnesses certify; search finds none on g, abelian", [] {
        struct Case {
            std::string name;
            LieAlgebra L;
            bool expected;
        };
        std::vector<Case> cases{
            {"case a", jacobson_case('a'), false},
            {"case b", jacobson_case('b'), true},
            {"case c", jacobson_case('c'), true},
            {"case d", jacobson_case('d', {1, 2, 0, 3}), true},
            {"case e", jacobson_case('e', {1, -1}), true},
            {"abelian", abelian(3), false},
            {"g", g_special(), false},
        };
        Rng rng(seed);
        for (std::size_t t = 0; t < random_3d_count; ++t) {
            RandomAlgebra r = random_lie_algebra_3d(rng);
            const bool expected = r.family != "abelian" && r.family != "g_special";
            cases.push_back({"random/" + r.family, r.algebra, expected});
        }
        std::size_t verdicts = 0, certified = 0, positives = 0;
        std::string first_bad;
        for (const auto& c : cases) {
            const PairDecision p = has_pm_pair(c.L);
            if (p.has_pair == c.expected) {
                ++verdicts;
            } else if (first_bad.empty()) {
                first_bad = c.name;
            }
            if (p.has_pair) {
                ++positives;
                const auto& [x, y] = *p.witness;
                certified += verify_pm_pair(c.L, line(x), line(y), pair_degree).verdict;
            }
        }
        const bool g_none = !search_pm_pair(g_special(), pair_degree, seed).verdict;
        const bool ab_none = !search_pm_pair(abelian(3), pair_degree, seed).verdict;
        std::ostringstream d;
        d << verdicts << "/" << cases.size() << " verdicts match";
        if (!first_bad.empty()) {
            d << " (first mismatch " << first_bad << ")";
        }
        d << ", " << certified << "/" << positives << " witnesses pass at d=" << pair_degree << ", search on g "
          << (g_none ? "empty" : "FOUND") << ", on abelian " << (ab_none ? "empty" : "FOUND");
        return Outcome{verdicts == cases.size() && certified == positives && g_none && ab_none, d.str()};
    });

    criterion(6, "k_invariant partitions the K(a,b) grid and is basis-independent", [] {
        const std::vector<Scalar> values{0, 1, -1, 2, -2, Scalar(1, 2), Scalar(-1, 2)};
        // Independent key: a = b is g; otherwise the unordered pair {a/b, b/a}
        // with 0 standing for any vanishing parameter.
        auto key = [](const Scalar& a, const Scalar& b) -> std::string {
            if (a == b) {
                return "g";
            }
            if (a == 0 || b == 0) {
                return "0";
            }
            const Scalar u = a / b, v = b / a;
            return u < v ? to_string(u) + "," + to_string(v) : to_string(v) + "," + to_string(u);
        };
        auto label = [](const KInvariant& k) { return k.is_g ? std::string("g") : k.cls->to_string(); };
        Rng rng(seed);
        std::size_t points = 0, consistent = 0, invariant = 0;
        std::vector<std::tuple<std::string, std::string>> seen;
        for (const auto& a : values) {
            for (const auto& b : values) {
                if (a == 0 && b == 0) {
                    continue;
                }
                ++points;
                const KInvariant k = k_invariant(a, b);
                seen.emplace_back(key(a, b), label(k));
                std::size_t ok = 0;
                const LieAlgebra K = k_family(a, b);
                for (std::size_t t = 0; t < basis_changes; ++t) {
                    const LieAlgebra moved = change_basis(K, rng.invertible_matrix(3));
                    const auto c = k_class(moved);
                    ok += k.is_g ? (!c && is_isomorphic_to_g(moved)) : (c && *c == *k.cls);
                }
                invariant += ok == basis_changes;
            }
        }
        for (const auto& [ka, la] : seen) {
            bool good = true;
            for (const auto& [kb, lb] : seen) {
                good = good && ((ka == kb) == (la == lb));
            }
            consistent += good;
        }
        const bool relations = k_invariant(2, 1).cls == k_invariant(Scalar(1, 2), 1).cls &&
                               k_invariant(-2, 1).cls == k_invariant(Scalar(-1, 2), 1).cls &&
                               k_invariant(0, 2).cls == k_invariant(0, 1).cls &&
                               k_invariant(0, Scalar(-1, 2)).cls == k_invariant(0, 1).cls;
        std::ostringstream d;
        d << consistent << "/" << points << " grid points partition-consistent, " << invariant << "/" << points
          << " invariant under " << basis_changes << " basis changes, K(a,1)~K(1/a,1) and K(0,c)~K(0,1) "
          << (relations ? "hold" : "FAIL");
        return Outcome{consistent == points && invariant == points && relations, d.str()};
    });

    criterion(7, "regular_class recovers A(r); a_isomorphic separates; k_to_a", [] {
        const std::vector<RClass> rs{RClass{Scalar(0)}, RClass{Scalar(1)}, RClass{Scalar(-1)},
                                     RClass{Scalar(2)}, RClass{Scalar(-1, 4)}, RClass::infinity()};
        std::size_t recovered = 0;
        std::ostringstream d;
        for (const auto& r : rs) {
            const RegularClass c = regular_class(a_family(r.r));
            const bool ok = c.kind == RegularClass::Kind::a && c.r && *c.r == r;
            recovered += ok;
            if (!ok) {
                d << "A(" << r.to_string() << ") -> " << c.to_string() << "; ";
            }
        }
        std::size_t separated = 0, pairs = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            for (std::size_t j = 0; j < rs.size(); ++j) {
                ++pairs;
                separated += a_isomorphic(rs[i], rs[j]) == (i == j);
            }
        }
        bool values = true;
        for (long u : {-2L, 2L, 3L}) {
            const Scalar U(u);
            const KToA m = k_to_a(U);
            values = values && m.r.r && *m.r.r == -U / ((U + 1) * (U + 1)) && !m.anomaly;
        }
        values = values && k_to_a(-1).r.is_infinity();
        bool anomaly_exact = true;
        for (const Scalar& u : {Scalar(-3), Scalar(-2), Scalar(-1), Scalar(1, 2), Scalar(-1, 2), Scalar(1),
                                Scalar(2), Scalar(3)}) {
            anomaly_exact = anomaly_exact && k_to_a(u).anomaly == (u == 1);
        }
        Matrix minus_id(2, 2);
        minus_id(0, 0) = -1;
        minus_id(1, 1) = -1;
        Matrix companion(2, 2);
        companion(0, 1) = Scalar(-1, 4);
        companion(1, 0) = 1;
        companion(1, 1) = 1;
        const bool similar_false = !similar2(minus_id, companion);
        d << recovered << "/" << rs.size() << " recovered, " << separated << "/" << pairs
          << " ordered pairs separated, k_to_a values " << (values ? "match" : "MISMATCH") << ", anomaly "
          << (anomaly_exact ? "exactly at u=1" : "WRONG") << ", similar2(diag(-1,-1), companion) "
          << (similar_false ? "false" : "true");
        return Outcome{recovered == rs.size() && separated == pairs && values && anomaly_exact && similar_false,
                       d.str()};
    });

    criterion(8, "regular pair certificates at d=4", [] {
        struct Case {
            std::string name;
            LieAlgebra L;
            Vector p, m;
            Matrix sigma;
        };
        auto map3 = [](std::vector<Vector> images) { return Matrix::from_columns(images, 3); };
        const Vector e0 = unit_vector(3, 0), e1 = unit_vector(3, 1), e2 = unit_vector(3, 2);
        const Matrix flip_a = map3({e0, Scalar(-1) * e1, Scalar(-1) * e2});
        const std::vector<Case> cases{
            {"sl2", sl2(), e0, e2, map3({e2, Scalar(-1) * e1, e0})},
            {"H", heisenberg(), e0, e1, map3({e1, e0, Scalar(-1) * e2})},
            {"A(0)", a_family(Scalar(0)), {1, 1, 0}, {1, -1, 0}, flip_a},
            {"A(inf)", a_family(std::nullopt), {1, 1, 0}, {1, -1, 0}, flip_a},
        };
        bool all = true;
        std::ostringstream d;
        for (const auto& c : cases) {
            const Certificate cert = verify_regular_pair(c.L, line(c.p), line(c.m), c.sigma, pair_degree);
            all = all && cert.verdict;
            d << c.name << " " << (cert.verdict ? "pass" : "fail");
            if (!cert.verdict && !cert.witnesses.empty()) {
                d << " [" << cert.witnesses.back() << "]";
            }
            d << " rank " << cert.rank.value_or(0) << "/" << cert.target.value_or(0) << "; ";
        }
        return Outcome{all, d.str()};
    });

    criterion(9, "triangular and Z^2-graded factorization schemes", [] {
        const auto start = Clock::now();
        bool all = true;
        std::ostringstream d;
        auto run = [&](const std::string& name, const LieAlgebra& L, const FactorizationScheme& s, unsigned deg) {
            const Certificate c = span_certificate(L, s, deg);
            all = all && c.verdict;
            d << name << " " << *c.rank << "/" << *c.target << "; ";
        };
        using Set = std::set<std::size_t>;
        const LieAlgebra sl3 = sl3_chevalley();
        const auto t3 = sl3_triangular();
        for (const auto& [I, J] : std::vector<std::pair<Set, Set>>{{{}, {1, 2}}, {{1}, {2}}, {{2}, {1}}, {{1, 2}, {}}}) {
            std::string name = "sl3 I={";
            for (auto i : I) name += std::to_string(i);
            name += "}";
            run(name, sl3, borcherds_scheme(sl3, t3, I, J), 3);
        }
        for (const auto& [I, J] : std::vector<std::pair<Set, Set>>{{{}, {1}}, {{1}, {}}}) {
            const std::string tag = I.empty() ? " I={}" : " I={1}";
            run("sl2" + tag, sl2(), borcherds_scheme(sl2(), sl2_triangular(), I, J), 4);
            run("borcherds_rank1" + tag, borcherds_rank1_zero(),
                borcherds_scheme(borcherds_rank1_zero(), borcherds_rank1_triangular(), I, J), 4);
        }
        const ZGradedScheme z = zgraded_scheme(sl3, sl3_root_grading(), {1, 0}, 3);
        all = all && z.hypotheses.verdict;
        d << "sl3 Z^2 hypotheses " << (z.hypotheses.verdict ? "pass" : "fail") << ", ";
        run("4-factor", sl3, z.scheme, 3);
        const double s = seconds_since(start);
        d << s << "s (limit " << limit_section3_suite << "s)";
        return Outcome{all && s < limit_section3_suite, d.str()};
    });

    criterion(10, "sl2 irreducible modules n <= 6", [] {
        bool all = true;
        std::ostringstream d;
        for (unsigned n = 0; n <= 6; ++n) {
            const Representation R = sl2_irrep(n);
            RepSuiteOptions opt;
            opt.x = unit_vector(3, 0);
            opt.y = unit_vector(3, 2);
            opt.nilpotent = {"e", "f"};
            opt.semisimple = "h";
            opt.degree = 2 * n + 1;
            opt.samples = 20;
            opt.seed = seed + n;
            const Certificate suite = rep_suite(R, opt);
            const Certificate ident = sl2_module_identities(R, n);
            const SemisimpleResult ss = semisimple_on(R.act(unit_vector(3, 1)), Subspace::whole(n + 1));
            std::vector<Scalar> expected;
            for (unsigned i = 0; i <= n; ++i) {
                expected.push_back(Scalar(static_cast<long>(n) - 2 * static_cast<long>(i)));
            }
            const bool ok = suite.verdict && ident.verdict && ss.semisimple && ss.spectrum == expected &&
                            suite.details.at("samples_generating_module") == "20";
            all = all && ok;
            d << "n=" << n << (ok ? " ok" : " FAIL") << "; ";
        }
        return Outcome{all, d.str()};
    });

    criterion(11, "negative controls", [] {
        const LieAlgebra ab = abelian(3);
        const Certificate c =
            span_certificate(ab, {{line(unit_vector(3, 0)), line(unit_vector(3, 1)), line(unit_vector(3, 0))}, {}}, 2);
        const LieAlgebra L = sl2();
        const Certificate p = verify_pm_pair(L, Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)}),
                                             line(unit_vector(3, 2)), pair_degree);
        const bool rejected = !p.verdict && !p.witnesses.empty() && p.witnesses.front() == "P + M = L";
        std::ostringstream d;
        d << "abelian (Fx,Fy,Fx) d=2 " << (c.verdict ? "pass" : "fail") << " rank " << *c.rank << " vs " << *c.target
          << "; sl2 (span(e,h), Ff) " << (rejected ? "rejected: P + M = L" : "NOT rejected");
        return Outcome{!c.verdict && *c.rank == 6 && *c.target == 10 && rejected, d.str()};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
