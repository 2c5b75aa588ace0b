#include "liepm/schemes.hpp"

#include <string>

#include "liepm/errors.hpp"

namespace liepm {

namespace {

Subspace line(std::size_t n, const Vector& v) { return Subspace::span(n, {v}); }

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
    std::vector<Vector> out;
    for (const auto& u : A.basis()) {
        for (const auto& v : B.basis()) {
            out.push_back(bracket(L, u, v));
        }
    }
    return Subspace::span(L.dim(), out);
}

std::string degree_text(const std::vector<long long>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (i ? "," : "") + std::to_string(a[i]);
    }
    return s + ")";
}

}  // namespace

FactorizationScheme borcherds_scheme(const LieAlgebra& L, const TriangularDecomposition& t,
                                     const std::set<std::size_t>& I, const std::set<std::size_t>& J) {
    const std::size_t l = t.e.size();
    if (t.f.size() != l) {
        throw InvalidArgument("triangular data has different numbers of e_i and f_i");
    }
    for (auto i : I) {
        if (i < 1 || i > l || J.count(i)) {
            throw InvalidArgument("I and J do not partition {1.." + std::to_string(l) + "}");
        }
    }
    for (auto j : J) {
        if (j < 1 || j > l) {
            throw InvalidArgument("I and J do not partition {1.." + std::to_string(l) + "}");
        }
    }
    if (I.size() + J.size() != l) {
        throw InvalidArgument("I and J do not partition {1.." + std::to_string(l) + "}");
    }
    const std::size_t n = L.dim();
    const Subspace hprime = t.cartan.intersect(derived_subalgebra(L));
    const Subspace hsecond = hprime.complement_in(t.cartan);

    FactorizationScheme s;
    for (auto i : I) {
        s.factors.push_back(line(n, t.e[i - 1]));
        s.labels.push_back("Fe" + std::to_string(i));
    }
    s.factors.push_back(t.gminus);
    s.labels.push_back("g-");
    s.factors.push_back(hsecond);
    s.labels.push_back("h''");
    s.factors.push_back(t.gplus);
    s.labels.push_back("g+");
    for (auto j : J) {
        s.factors.push_back(line(n, t.f[j - 1]));
        s.labels.push_back("Ff" + std::to_string(j));
    }
    return s;
}

Subspace graded_part(const LieAlgebra& L, const Grading& grading, Sign sign) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (positivity(grading.degrees.at(i)) == sign) {
            out.push_back(L.unit(i));
        }
    }
    return Subspace::span(L.dim(), out);
}

ZGradedScheme zgraded_scheme(const LieAlgebra& L, const Grading& grading, const std::vector<long long>& alpha1,
                             unsigned d) {
    ZGradedScheme out;
    out.hypotheses.check = "zgraded_hypotheses";
    out.hypotheses.degree = d;
    const std::size_t n = L.dim();
    auto pass = [&](const std::string& h) { out.hypotheses.witnesses.push_back(h + ": pass"); };

    const Certificate g = check_grading(L, grading);
    if (!g.verdict) {
        throw HypothesisFailed("grading", g.witnesses.empty() ? "invalid" : g.witnesses.front());
    }
    pass("grading");
    if (alpha1.size() != grading.rank) {
        throw HypothesisFailed("alpha1", "has " + std::to_string(alpha1.size()) + " entries, grading rank is " +
                                             std::to_string(grading.rank));
    }
    if (positivity(alpha1) == Sign::zero) {
        throw HypothesisFailed("alpha1", "alpha1 = 0");
    }
    pass("alpha1 != 0");

    // Degrees in Delta that are integer multiples t alpha1 need t in {0, +-1}.
    for (const auto& beta : grading.support()) {
        std::optional<long long> t;
        bool ok = true;
        for (std::size_t i = 0; i < beta.size() && ok; ++i) {
            if (alpha1[i] == 0) {
                ok = beta[i] == 0;
            } else if (beta[i] % alpha1[i] != 0) {
                ok = false;
            } else {
                const long long q = beta[i] / alpha1[i];
                ok = !t || *t == q;
                t = q;
            }
        }
        if (ok && t && *t != 0 && *t != 1 && *t != -1) {
            throw HypothesisFailed("Z alpha1 cap Delta = {0, +-alpha1}", degree_text(beta) + " = " +
                                                                            std::to_string(*t) + " alpha1");
        }
    }
    std::vector<long long> minus_alpha1(alpha1);
    for (auto& c : minus_alpha1) {
        c = -c;
    }
    const Subspace gpa = grading.component(alpha1, n);
    const Subspace gma = grading.component(minus_alpha1, n);
    if (gpa.dim() == 0 || gma.dim() == 0) {
        throw HypothesisFailed("Z alpha1 cap Delta = {0, +-alpha1}", "+-alpha1 is not a degree of L");
    }
    pass("Z alpha1 cap Delta = {0, +-alpha1}");

    const Subspace k = bracket_span(L, gpa, gma);
    if (k.dim() == 0) {
        throw HypothesisFailed("[g_alpha1, g_-alpha1] != 0", "the bracket vanishes, so P + M = L for the pair");
    }
    pass("[g_alpha1, g_-alpha1] != 0");

    const Subspace sub = gpa + k + gma;
    if (!is_subalgebra(L, sub)) {
        throw HypothesisFailed("L_alpha1 is a subalgebra", "g_alpha1 + [g_alpha1, g_-alpha1] + g_-alpha1 is not closed");
    }
    pass("L_alpha1 is a subalgebra");

    const LieAlgebra small = restrict_to(L, sub, L.name() + "_alpha1");
    auto local = [&](const Subspace& S) {
        std::vector<Vector> coords;
        for (const auto& v : S.basis()) {
            coords.push_back(*sub.coordinates(v));
        }
        return Subspace::span(sub.dim(), coords);
    };
    const Certificate pair = verify_pm_pair(small, local(gpa), local(gma), d);
    if (!pair.verdict) {
        throw HypothesisFailed("(g_alpha1, g_-alpha1) is a plus-minus pair",
                               pair.witnesses.empty() ? "span fails" : pair.witnesses.front());
    }
    pass("(g_alpha1, g_-alpha1) is a plus-minus pair up to degree " + std::to_string(d));

    const Subspace g0 = graded_part(L, grading, Sign::zero);
    const Subspace g0p = k.complement_in(g0);
    if (!is_subalgebra(L, g0p)) {
        throw HypothesisFailed("g_0' is a subalgebra", "the complement of [g_alpha1, g_-alpha1] in g_0 is not closed");
    }
    pass("g_0' is a subalgebra");

    const Subspace gplus = graded_part(L, grading, Sign::positive);
    const Subspace gminus = graded_part(L, grading, Sign::negative);
    out.scheme.factors = {gpa, gminus, g0p, gplus};
    out.scheme.labels = {"g_alpha1", "g-", "g0'", "g+"};
    out.plus = gplus + g0p;
    out.minus = gminus;
    out.hypotheses.verdict = true;
    return out;
}

}  // namespace liepm
