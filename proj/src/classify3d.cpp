#include "liepm/classify3d.hpp"

#include "liepm/errors.hpp"
#include "liepm/span.hpp"

namespace liepm {

namespace {

void require_dim3(const LieAlgebra& L) {
    if (L.dim() != 3) {
        throw DimensionMismatch("expected a three-dimensional Lie algebra, got dimension " + std::to_string(L.dim()));
    }
}

bool generates(const LieAlgebra& L, const Vector& x, const Vector& y) {
    return generated_subalgebra(L, {x, y}).dim() == L.dim();
}

// Matrix of ad z on the span of `basis`, which must be ad z invariant.
Matrix restricted_ad(const LieAlgebra& L, const Subspace& S, const Vector& z) {
    const auto basis = S.basis();
    Matrix N(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        N.set_column(j, *S.coordinates(bracket(L, z, basis[j])));
    }
    return N;
}

Scalar det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Scalar abs_value(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

nlohmann::json vector_json(const Vector& v) {
    auto out = nlohmann::json::array();
    for (const auto& c : v) {
        out.push_back(to_string(c));
    }
    return out;
}

Vector vector_from_json(const nlohmann::json& j) {
    Vector v;
    for (const auto& c : j) {
        v.push_back(parse_scalar(c.get<std::string>()));
    }
    return v;
}

}  // namespace

JacobsonCase classify_jacobson(const LieAlgebra& L) {
    require_dim3(L);
    JacobsonCase out;
    const Subspace D = derived_subalgebra(L);
    out.derived_basis = D.basis();
    switch (D.dim()) {
    case 0:
        out.tag = 'a';
        break;
    case 1: {
        const Subspace Z = center(L);
        out.tag = Z.contains(D) ? 'b' : 'c';
        break;
    }
    case 2: {
        out.tag = 'd';
        const Subspace comp = D.complement_in(Subspace::whole(3));
        out.complement = comp.basis().front();
        out.ad_action = restricted_ad(L, D, *out.complement);
        break;
    }
    default:
        out.tag = 'e';
    }
    return out;
}

bool is_isomorphic_to_g(const LieAlgebra& L) {
    const JacobsonCase j = classify_jacobson(L);
    if (j.tag != 'd') {
        return false;
    }
    const auto& b = j.derived_basis;
    return is_zero(bracket(L, b[0], b[1])) && j.ad_action->is_scalar() && !j.ad_action->is_zero();
}

PairDecision has_pm_pair(const LieAlgebra& L) {
    const JacobsonCase j = classify_jacobson(L);
    PairDecision out;
    auto found = [&](Vector x, Vector y) {
        out.has_pair = true;
        out.witness = std::make_pair(std::move(x), std::move(y));
        return out;
    };
    switch (j.tag) {
    case 'a':
        return out;
    case 'b':
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t k = i + 1; k < 3; ++k) {
                if (!is_zero(L.structure(i, k))) {
                    return found(L.unit(i), L.unit(k));
                }
            }
        }
        return out;
    case 'c': {
        // Normalize to [x, y] = x with z central, then take (x + z, y).
        const Vector& x = j.derived_basis.front();
        const Subspace D = Subspace::span(3, {x});
        for (std::size_t i = 0; i < 3; ++i) {
            const Vector br = bracket(L, x, L.unit(i));
            if (!is_zero(br)) {
                const Vector y = (1 / (*D.coordinates(br))[0]) * L.unit(i);
                const Vector z = center(L).basis().front();
                return found(x + z, y);
            }
        }
        return out;
    }
    case 'd': {
        if (is_isomorphic_to_g(L)) {
            return out;
        }
        const Vector& x = j.derived_basis[0];
        const Vector& y = j.derived_basis[1];
        Vector z = *j.complement;
        // [x, z] = alpha x + beta y, [y, z] = gamma x + delta y.
        const Matrix& N = *j.ad_action;
        Scalar alpha = -N(0, 0), beta = -N(1, 0), gamma = -N(0, 1), delta = -N(1, 1);
        if (alpha == 0) {
            return found(x, y + z);
        }
        z = (1 / alpha) * z;
        beta /= alpha;
        gamma /= alpha;
        delta /= alpha;
        if (gamma != 0) {
            return found(-gamma * x + y, z);
        }
        if (beta != 0) {
            return found(x - (beta / delta) * y, z);
        }
        if (delta != 1) {
            return found(x + y, z);
        }
        return out;
    }
    default: {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t k = i + 1; k < 3; ++k) {
                if (generates(L, L.unit(i), L.unit(k))) {
                    return found(L.unit(i), L.unit(k));
                }
            }
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t k = 0; k < 3; ++k) {
                for (std::size_t m = k + 1; m < 3; ++m) {
                    if (i != k && i != m && generates(L, L.unit(i), L.unit(k) + L.unit(m))) {
                        return found(L.unit(i), L.unit(k) + L.unit(m));
                    }
                }
            }
        }
        return found(L.unit(0) + L.unit(1), L.unit(1) + L.unit(2));
    }
    }
}

PFClass PFClass::of(const Scalar& u) {
    if (u == 1) {
        throw InvalidArgument("u = 1 is not in P(F); K(a, a) is g");
    }
    if (u == 0) {
        return zero();
    }
    return PFClass(abs_value(u) > 1 ? Scalar(1 / u) : u);
}

std::string PFClass::to_string() const {
    if (rep_ == 0 || rep_ == -1) {
        return "{" + liepm::to_string(rep_) + "}";
    }
    return "{" + liepm::to_string(rep_) + ", " + liepm::to_string(Scalar(1 / rep_)) + "}";
}

PFClass PFClass::parse(const std::string& text) {
    if (text.size() < 3 || text.front() != '{' || text.back() != '}') {
        throw InvalidArgument("not a P(F) class: " + text);
    }
    const std::string inner = text.substr(1, text.size() - 2);
    return of(parse_scalar(inner.substr(0, inner.find(','))));
}

KInvariant k_invariant(const Scalar& a, const Scalar& b) {
    if (a == 0 && b == 0) {
        throw InvalidArgument("K(0, 0) is abelian");
    }
    if (a == 0 || b == 0) {
        return {PFClass::zero(), false};
    }
    const Scalar u = a / b;
    if (u == 1) {
        return {std::nullopt, true};
    }
    return {PFClass::of(u), false};
}

std::optional<PFClass> k_class(const LieAlgebra& L) {
    const JacobsonCase j = classify_jacobson(L);
    if (j.tag == 'c') {
        return PFClass::zero();
    }
    if (j.tag != 'd' || j.ad_action->is_scalar()) {
        return std::nullopt;
    }
    const Matrix& N = *j.ad_action;
    const Scalar tau = N.trace();
    const Scalar disc = tau * tau - 4 * det2(N);
    const auto s = rational_sqrt(disc);
    if (!s || *s == 0) {
        return std::nullopt;
    }
    const Scalar l1 = (tau + *s) / 2;
    const Scalar l2 = (tau - *s) / 2;
    return PFClass::of(l1 / l2);
}

std::string RClass::to_string() const { return r ? liepm::to_string(*r) : "inf"; }

RClass RClass::parse(const std::string& text) {
    if (text == "inf" || text == "∞") {
        return infinity();
    }
    return RClass{parse_scalar(text)};
}

bool a_isomorphic(const RClass& r, const RClass& s) { return r == s; }

bool similar2(const Matrix& A, const Matrix& B) {
    if (A.rows() != 2 || A.cols() != 2 || B.rows() != 2 || B.cols() != 2) {
        throw DimensionMismatch("similar2 takes 2x2 matrices");
    }
    return A.trace() == B.trace() && det2(A) == det2(B) && A.is_scalar() == B.is_scalar();
}

std::optional<Scalar> similar2_up_to_scalar(const Matrix& A, const Matrix& B) {
    std::vector<Scalar> candidates;
    if (B.trace() != 0) {
        candidates.push_back(A.trace() / B.trace());
    } else if (A.trace() == 0) {
        if (det2(B) != 0) {
            if (auto s = rational_sqrt(det2(A) / det2(B))) {
                candidates.push_back(*s);
                candidates.push_back(-*s);
            }
        } else {
            candidates.push_back(1);
        }
    }
    for (const auto& a : candidates) {
        if (a != 0 && similar2(A, a * B)) {
            return a;
        }
    }
    return std::nullopt;
}

KToA k_to_a(const Scalar& u) {
    if (u == 0) {
        throw InvalidArgument("k_to_a needs u != 0; K(0, 1) has class {0}");
    }
    if (u == -1) {
        return {RClass::infinity(), false};
    }
    const Scalar r = -u / ((u + 1) * (u + 1));
    const Matrix K{{-u, 0}, {0, -1}};
    const Matrix C{{0, r}, {1, 1}};
    return {RClass{r}, !similar2_up_to_scalar(K, C).has_value()};
}

std::string RegularClass::to_string() const {
    switch (kind) {
    case Kind::sl2:
        return "SL2";
    case Kind::heisenberg:
        return "HEISENBERG";
    case Kind::a:
        return "A(" + r->to_string() + ")";
    default:
        return "NOT_CERTIFIED";
    }
}

RegularClass RegularClass::parse(const std::string& text) {
    RegularClass out;
    if (text == "SL2") {
        out.kind = Kind::sl2;
    } else if (text == "HEISENBERG") {
        out.kind = Kind::heisenberg;
    } else if (text.size() > 3 && text.rfind("A(", 0) == 0 && text.back() == ')') {
        out.kind = Kind::a;
        out.r = RClass::parse(text.substr(2, text.size() - 3));
    } else if (text == "NOT_CERTIFIED") {
        out.kind = Kind::not_certified;
    } else {
        throw InvalidArgument("unknown regular class: " + text);
    }
    return out;
}

std::optional<std::vector<Vector>> find_sl2_triple(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Vector u(n);
    std::optional<std::vector<Vector>> result;
    auto attempt = [&]() -> bool {
        const Matrix A = ad_matrix(L, u);
        const Scalar killing = (A * A).trace();
        const auto lambda = rational_sqrt(killing / 2);
        if (!lambda || *lambda == 0) {
            return false;
        }
        const auto up = nullspace(A - *lambda * Matrix::identity(n));
        const auto down = nullspace(A + *lambda * Matrix::identity(n));
        if (up.size() != 1 || down.size() != 1) {
            return false;
        }
        const Vector e = up.front();
        const Vector h = (2 / *lambda) * u;
        Vector f = down.front();
        const Vector ef = bracket(L, e, f);
        const auto mu = Subspace::span(n, {h}).coordinates(ef);
        if (!mu || (*mu)[0] == 0) {
            return false;
        }
        f = (1 / (*mu)[0]) * f;
        if (bracket(L, h, e) != 2 * e || bracket(L, h, f) != Scalar(-2) * f || bracket(L, e, f) != h) {
            return false;
        }
        result = std::vector<Vector>{e, h, f};
        return true;
    };
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == n) {
            return !is_zero(u) && attempt();
        }
        for (int c : {0, 1, -1, 2, -2, 3, -3}) {
            u[pos] = c;
            if (self(self, pos + 1)) {
                return true;
            }
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

RegularClass regular_class(const LieAlgebra& L) {
    const JacobsonCase j = classify_jacobson(L);
    RegularClass out;
    using Kind = RegularClass::Kind;
    switch (j.tag) {
    case 'a':
        out.note = "abelian: no plus-minus pair";
        return out;
    case 'b':
        out.kind = Kind::heisenberg;
        return out;
    case 'c':
        out.kind = Kind::a;
        out.r = RClass{Scalar(0)};
        return out;
    case 'd': {
        const Matrix& N = *j.ad_action;
        if (N.is_scalar()) {
            out.note = "ad z acts on L' as a scalar: g has no plus-minus pair";
            return out;
        }
        const Scalar tau = N.trace();
        const Scalar delta = det2(N);
        if (tau != 0) {
            out.kind = Kind::a;
            out.r = RClass{-delta / (tau * tau)};
            return out;
        }
        if (rational_sqrt(-delta)) {
            out.kind = Kind::a;
            out.r = RClass::infinity();
            return out;
        }
        out.note = "tr N = 0 and -det N = " + to_string(Scalar(-delta)) +
                   " is not a rational square: A(inf) only after a field extension";
        return out;
    }
    default:
        if (auto t = find_sl2_triple(L)) {
            out.kind = Kind::sl2;
            out.note = "e = " + L.format((*t)[0]) + ", h = " + L.format((*t)[1]) + ", f = " + L.format((*t)[2]);
        } else {
            out.note = "simple, but no split element with coordinates in {-3..3}";
        }
        return out;
    }
}

ThreeGraded three_graded_classify(const LieAlgebra& L, const Grading& grading, unsigned d) {
    require_dim3(L);
    std::optional<std::size_t> ix, iy, iz;
    if (grading.rank == 1 && grading.degrees.size() == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            const long long g = grading.degrees[i].at(0);
            auto& slot = g == 1 ? ix : g == -1 ? iy : iz;
            if (g < -1 || g > 1 || slot) {
                ix.reset();
                break;
            }
            slot = i;
        }
    }
    if (!ix || !iy || !iz || !check_grading(L, grading).verdict) {
        throw InvalidArgument("three_graded_classify needs a valid Z-grading with degrees -1, 0, 1 once each");
    }
    const Vector x = L.unit(*ix), y = L.unit(*iy), z = L.unit(*iz);
    ThreeGraded out;
    out.pair = verify_pm_pair(L, Subspace::span(3, {x}), Subspace::span(3, {y}), d);
    const Vector w = bracket(L, x, y);
    if (is_zero(w)) {
        const Scalar a = bracket(L, x, z)[*ix];
        const Scalar b = bracket(L, y, z)[*iy];
        if (a == 0 && b == 0) {
            out.reason = "abelian";
        } else if (a == b) {
            out.reason = "[x,z] = a x and [y,z] = a y: isomorphic to g";
        } else {
            out.kind = ThreeGraded::Kind::k;
            out.ab = std::make_pair(a, b);
        }
        return out;
    }
    const Scalar p = bracket(L, w, x)[*ix];
    out.kind = p == 0 ? ThreeGraded::Kind::heisenberg : ThreeGraded::Kind::sl2;
    return out;
}

ClassificationReport classify(const LieAlgebra& L) {
    ClassificationReport out;
    const JacobsonCase j = classify_jacobson(L);
    out.jacobson_case = j.tag;
    const PairDecision p = has_pm_pair(L);
    out.has_pair = p.has_pair;
    out.witness = p.witness;
    out.pf_class = k_class(L);
    if (j.tag == 'c') {
        out.r_class = RClass{Scalar(0)};
    } else if (j.tag == 'd' && !j.ad_action->is_scalar()) {
        const Scalar tau = j.ad_action->trace();
        out.r_class = tau != 0 ? RClass{-det2(*j.ad_action) / (tau * tau)} : RClass::infinity();
    }
    out.regular_class = regular_class(L);
    if (is_isomorphic_to_g(L)) {
        out.anomaly_flags.push_back("u_equals_one");
    }
    return out;
}

nlohmann::json to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["jacobson_case"] = std::string(1, r.jacobson_case);
    j["has_pair"] = r.has_pair;
    j["witness"] = r.witness ? nlohmann::json::array({vector_json(r.witness->first), vector_json(r.witness->second)})
                             : nlohmann::json(nullptr);
    j["pf_class"] = r.pf_class ? nlohmann::json(r.pf_class->to_string()) : nlohmann::json(nullptr);
    j["r_class"] = r.r_class ? nlohmann::json(r.r_class->to_string()) : nlohmann::json(nullptr);
    j["regular_class"] = r.regular_class.to_string();
    if (!r.regular_class.note.empty()) {
        j["regular_note"] = r.regular_class.note;
    }
    j["anomaly_flags"] = r.anomaly_flags;
    return j;
}

ClassificationReport report_from_json(const nlohmann::json& j) {
    ClassificationReport r;
    r.jacobson_case = j.at("jacobson_case").get<std::string>().at(0);
    r.has_pair = j.at("has_pair").get<bool>();
    if (!j.at("witness").is_null()) {
        r.witness = std::make_pair(vector_from_json(j["witness"][0]), vector_from_json(j["witness"][1]));
    }
    if (!j.at("pf_class").is_null()) {
        r.pf_class = PFClass::parse(j["pf_class"].get<std::string>());
    }
    if (!j.at("r_class").is_null()) {
        r.r_class = RClass::parse(j["r_class"].get<std::string>());
    }
    r.regular_class = RegularClass::parse(j.at("regular_class").get<std::string>());
    r.regular_class.note = j.value("regular_note", std::string{});
    r.anomaly_flags = j.at("anomaly_flags").get<std::vector<std::string>>();
    return r;
}

std::string to_text(const LieAlgebra& L, const ClassificationReport& r) {
    std::string s;
    s += "algebra: " + L.name() + "\n";
    s += "jacobson_case: " + std::string(1, r.jacobson_case) + "\n";
    s += std::string("has_pair: ") + (r.has_pair ? "true" : "false") + "\n";
    if (r.witness) {
        s += "witness: x = " + L.format(r.witness->first) + ", y = " + L.format(r.witness->second) + "\n";
    }
    s += "pf_class: " + (r.pf_class ? r.pf_class->to_string() : std::string("none")) + "\n";
    s += "r_class: " + (r.r_class ? r.r_class->to_string() : std::string("none")) + "\n";
    s += "regular_class: " + r.regular_class.to_string() + "\n";
    if (!r.regular_class.note.empty()) {
        s += "regular_note: " + r.regular_class.note + "\n";
    }
    std::string flags;
    for (const auto& f : r.anomaly_flags) {
        flags += (flags.empty() ? "" : ", ") + f;
    }
    s += "anomaly_flags: " + (flags.empty() ? std::string("none") : flags) + "\n";
    return s;
}

}  // namespace liepm
