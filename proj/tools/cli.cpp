#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "liepm/algebra_io.hpp"
#include "liepm/classify3d.hpp"
#include "liepm/constructors.hpp"
#include "liepm/errors.hpp"
#include "liepm/repcheck.hpp"
#include "liepm/span.hpp"
#include "liepm/xyx.hpp"

namespace liepm::cli {

namespace {

struct Options {
    std::string file;
    std::string expression;
    unsigned degree = 4;
    std::uint64_t seed = 0;
    bool json = false;
    bool serial = false;
    bool search = false;
    std::string pair;
    std::string scheme;
    std::string sigma;
    std::string method = "linear";
    std::optional<unsigned> irrep;
    std::string matrices;
};

ParsedAlgebra load_checked(const std::string& path) {
    ParsedAlgebra p;
    if (auto b = builtin_algebra(path)) {
        p.algebra = *b;
        p.axioms = check_axioms(p.algebra);
    } else {
        p = load_algebra(path);
    }
    if (!p.axioms.verdict) {
        throw InvalidArgument("algebra fails the Lie axioms: " +
                              (p.axioms.witnesses.empty() ? std::string("?") : p.axioms.witnesses.front()));
    }
    return p;
}

std::pair<Subspace, Subspace> parse_pair(const ParsedAlgebra& p, const std::string& text) {
    const auto items = split_top_level(text);
    if (items.size() != 2) {
        throw InvalidArgument("--pair needs two comma-separated items, got " + std::to_string(items.size()));
    }
    return {parse_subspace(p.algebra, p.grading, items[0]), parse_subspace(p.algebra, p.grading, items[1])};
}

std::pair<Vector, Vector> parse_vector_pair(const ParsedAlgebra& p, const std::string& text) {
    const auto items = split_top_level(text);
    if (items.size() != 2) {
        throw InvalidArgument("--pair needs two comma-separated vectors");
    }
    return {parse_vector(p.algebra, items[0]), parse_vector(p.algebra, items[1])};
}

int emit(const Certificate& c, const Options& o, std::ostream& out) {
    if (o.json) {
        out << to_json(c).dump(2) << "\n";
    } else {
        out << to_text(c);
    }
    return c.verdict ? pass : fail;
}

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

int cmd_check(const Options& o, std::ostream& out) {
    ParsedAlgebra p = builtin_algebra(o.file) ? ParsedAlgebra{*builtin_algebra(o.file), std::nullopt, {}}
                                              : load_algebra(o.file);
    Certificate c = check_axioms(p.algebra);
    c.details["algebra"] = p.algebra.name();
    c.details["dim"] = std::to_string(p.algebra.dim());
    if (c.verdict && p.grading) {
        const Certificate g = check_grading(p.algebra, *p.grading);
        c.details["grading"] = g.verdict ? "valid" : "invalid";
        if (!g.verdict) {
            c.verdict = false;
            c.witnesses = g.witnesses;
        }
    }
    if (!p.axioms.witnesses.empty()) {
        c.witnesses = p.axioms.witnesses;
    }
    c.seed = o.seed;
    return emit(c, o, out);
}

int cmd_nf(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    const NCPoly e = parse_expression(p.algebra, o.expression);
    const PBWPoly n = pbw_normal_form(p.algebra, e);
    if (o.json) {
        nlohmann::json j;
        j["expression"] = o.expression;
        j["normal_form"] = format(p.algebra, n);
        j["degree"] = n.degree();
        out << j.dump(2) << "\n";
    } else {
        out << format(p.algebra, n) << "\n";
    }
    return pass;
}

int cmd_factorize(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    const auto [x, y] = parse_vector_pair(p, o.pair);
    const NCPoly e = parse_expression(p.algebra, o.expression);
    XyxRewriter rw(p.algebra, x, y);
    const XYXPoly r = o.method == "recursive" ? rw.rewrite_recursive(e) : rw.rewrite_linear(e);
    const PBWPoly target = pbw_normal_form(p.algebra, e);
    bool round_trip = rw.normal_form(r) == target;
    bool coefficients_agree = true;
    if (o.method == "both") {
        const XYXPoly rec = rw.rewrite_recursive(e);
        round_trip = round_trip && rw.normal_form(rec) == target;
        coefficients_agree = rec == r;
    }
    if (o.json) {
        nlohmann::json j;
        j["expression"] = o.expression;
        j["x"] = p.algebra.format(x);
        j["y"] = p.algebra.format(y);
        j["method"] = o.method;
        auto terms = nlohmann::json::array();
        for (const auto& [m, c] : r.terms) {
            terms.push_back({{"i", m[0]}, {"j", m[1]}, {"k", m[2]}, {"c", to_string(c)}});
        }
        j["terms"] = terms;
        j["xyx"] = format(p.algebra, r);
        j["round_trip"] = round_trip;
        if (o.method == "both") {
            j["coefficients_agree"] = coefficients_agree;
        }
        out << j.dump(2) << "\n";
    } else {
        out << format(p.algebra, r) << "\n";
        out << "round_trip: " << (round_trip ? "pass" : "fail") << "\n";
        if (o.method == "both") {
            out << "coefficients_agree: " << (coefficients_agree ? "yes" : "no") << "\n";
        }
    }
    return round_trip ? pass : fail;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    const ClassificationReport r = classify(p.algebra);
    if (o.json) {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << to_text(p.algebra, r);
    }
    return pass;
}

int cmd_span(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    const FactorizationScheme s = parse_scheme(p.algebra, p.grading, o.scheme);
    Certificate c = span_certificate(p.algebra, s, o.degree, execution(o));
    c.seed = o.seed;
    return emit(c, o, out);
}

int cmd_pair(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    Certificate c;
    if (o.search) {
        c = search_pm_pair(p.algebra, o.degree, o.seed);
    } else {
        const auto [P, M] = parse_pair(p, o.pair);
        c = verify_pm_pair(p.algebra, P, M, o.degree, execution(o));
    }
    c.seed = o.seed;
    return emit(c, o, out);
}

int cmd_regular(const Options& o, std::ostream& out) {
    const ParsedAlgebra p = load_checked(o.file);
    const auto [P, M] = parse_pair(p, o.pair);
    const Matrix sigma = parse_linear_map(p.algebra, o.sigma);
    Certificate c = verify_regular_pair(p.algebra, P, M, sigma, o.degree, execution(o));
    c.seed = o.seed;
    return emit(c, o, out);
}

int cmd_rep(const Options& o, std::ostream& out) {
    Representation R;
    RepSuiteOptions opt;
    opt.seed = o.seed;
    opt.degree = std::max(o.degree, 1u);
    if (o.matrices.empty()) {
        R = sl2_irrep(o.irrep.value_or(3));
    } else {
        const ParsedAlgebra p = load_checked(o.file.empty() ? "sl2" : o.file);
        std::ifstream in(o.matrices);
        if (!in) {
            throw InvalidArgument("cannot open " + o.matrices);
        }
        R = representation_from_json(p.algebra, nlohmann::json::parse(in));
    }
    const LieAlgebra& L = R.algebra;
    const bool sl2_names = L.index_of("e") && L.index_of("h") && L.index_of("f") && L.dim() == 3;
    if (!o.pair.empty()) {
        ParsedAlgebra p{L, std::nullopt, {}};
        std::tie(opt.x, opt.y) = parse_vector_pair(p, o.pair);
    } else if (sl2_names) {
        opt.x = L.unit(*L.index_of("e"));
        opt.y = L.unit(*L.index_of("f"));
    } else {
        throw InvalidArgument("--pair is required for algebras without e, h, f");
    }
    if (sl2_names) {
        opt.nilpotent = {"e", "f"};
        opt.semisimple = "h";
    }
    Certificate c = rep_suite(R, opt);
    if (c.verdict && sl2_names && o.matrices.empty()) {
        const Certificate id = sl2_module_identities(R, o.irrep.value_or(3));
        c.details["h(e^n v) = n e^n v"] = id.verdict ? "holds" : "fails";
        if (!id.verdict) {
            c.verdict = false;
            c.witnesses = id.witnesses;
        }
    }
    return emit(c, o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plus-minus pairs and PBW factorization certificates for Lie algebras over Q", "liepm"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--degree,-d", o.degree, "Filtration degree bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "Seed for every random choice");
        sub->add_flag("--json", o.json, "Emit JSON");
    };
    auto file = [&](CLI::App* sub) {
        sub->add_option("algebra", o.file, "Algebra file, or a built-in name (sl2, heisenberg, ...)")->required();
    };

    auto* check = app.add_subcommand("check", "Check the Lie axioms (and grading) of an algebra file");
    file(check);
    common(check);

    auto* nf = app.add_subcommand("nf", "Print the PBW normal form of an expression");
    file(nf);
    nf->add_option("expression", o.expression, "Expression such as e*f^2 - 2*h")->required();
    common(nf);

    auto* fac = app.add_subcommand("factorize", "Rewrite an expression as sum c x^i y^j x^k");
    file(fac);
    fac->add_option("expression", o.expression, "Expression to rewrite")->required();
    fac->add_option("--pair", o.pair, "Generating pair \"x,y\"")->required();
    fac->add_option("--method", o.method, "linear, recursive or both")
        ->check(CLI::IsMember({"linear", "recursive", "both"}));
    common(fac);

    auto* cls = app.add_subcommand("classify", "Classify a three-dimensional algebra");
    file(cls);
    common(cls);

    auto* span = app.add_subcommand("span", "Spanning certificate for an ordered factorization scheme");
    file(span);
    span->add_option("--scheme", o.scheme, "Factors, e.g. \"gplus,gminus,gplus\" or \"e,span(f,h),e\"")->required();
    span->add_flag("--serial", o.serial, "Normalize products on one thread");
    common(span);

    auto* pair = app.add_subcommand("pair", "Plus-minus pair certificate");
    file(pair);
    pair->add_option("--pair", o.pair, "Subalgebras \"P,M\"");
    pair->add_flag("--search", o.search, "Heuristic seeded search over small lines instead of --pair");
    pair->add_flag("--serial", o.serial, "Normalize products on one thread");
    common(pair);

    auto* reg = app.add_subcommand("regular", "Regular plus-minus pair certificate");
    file(reg);
    reg->add_option("--pair", o.pair, "Subalgebras \"P,M\"")->required();
    reg->add_option("--sigma", o.sigma, "Images of the basis vectors, e.g. \"f,-h,e\"")->required();
    reg->add_flag("--serial", o.serial, "Normalize products on one thread");
    common(reg);

    auto* rep = app.add_subcommand("rep", "Representation checks on a bundled or supplied module");
    rep->add_option("algebra", o.file, "Algebra of the supplied module (default sl2)");
    rep->add_option("--irrep", o.irrep, "Bundled sl2 irreducible module of highest weight n");
    rep->add_option("--matrices", o.matrices, "JSON file with one matrix per basis symbol");
    rep->add_option("--pair", o.pair, "Pair \"x,y\" driving generated submodules");
    common(rep);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return pass;
        }
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (pair->parsed() && !o.search && o.pair.empty()) {
            throw InvalidArgument("pair needs --pair or --search");
        }
        if (check->parsed()) return cmd_check(o, out);
        if (nf->parsed()) return cmd_nf(o, out);
        if (fac->parsed()) return cmd_factorize(o, out);
        if (cls->parsed()) return cmd_classify(o, out);
        if (span->parsed()) return cmd_span(o, out);
        if (pair->parsed()) return cmd_pair(o, out);
        if (reg->parsed()) return cmd_regular(o, out);
        if (rep->parsed()) return cmd_rep(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace liepm::cli
