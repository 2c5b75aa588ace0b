#include "liepm/algebra_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "liepm/errors.hpp"
#include "liepm/schemes.hpp"

namespace liepm {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Recursive-descent parser over one line; `offset` is the column of text[0]
// minus one, so errors point into the original line.
class ExpressionParser {
public:
    ExpressionParser(const LieAlgebra& L, std::string_view text, std::size_t line, std::size_t offset)
        : L_(L), text_(text), line_(line), offset_(offset) {}

    NCPoly parse() {
        NCPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, offset_ + pos_ + 1, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            return false;
        }
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(' || c == '[';
    }

    NCPoly expr() {
        NCPoly out(L_.dim());
        bool first = true;
        while (true) {
            Scalar sign = 1;
            if (peek('+') || peek('-')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                return out;
            }
            first = false;
            out += sign * term();
        }
    }

    NCPoly term() {
        NCPoly out = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                out = out * factor();
            } else if (starts_atom()) {
                out = out * factor();
            } else {
                return out;
            }
        }
    }

    NCPoly factor() {
        NCPoly base = atom();
        if (peek('^')) {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a nonnegative integer exponent");
            }
            const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
            NCPoly out = NCPoly::unit(L_.dim());
            for (unsigned long i = 0; i < n; ++i) {
                out = out * base;
            }
            return out;
        }
        return base;
    }

    NCPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly inner = expr();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (c == '[') {
            ++pos_;
            NCPoly a = expr();
            if (!peek(',')) {
                fail("expected ',' in commutator");
            }
            ++pos_;
            NCPoly b = expr();
            if (!peek(']')) {
                fail("expected ']'");
            }
            ++pos_;
            return a * b - b * a;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t den = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                if (den == pos_) {
                    fail("expected a denominator");
                }
            }
            if (pos_ < text_.size() && text_[pos_] == '.') {
                fail("non-rational coefficient");
            }
            Scalar value;
            try {
                value = parse_scalar(text_.substr(start, pos_ - start));
            } catch (const InvalidArgument& e) {
                pos_ = start;
                fail(e.what());
            }
            return value * NCPoly::unit(L_.dim());
        }
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            const auto idx = L_.index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return NCPoly::word(L_.dim(), Word{static_cast<std::uint32_t>(*idx)});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const LieAlgebra& L_;
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

Vector to_vector(const LieAlgebra& L, const NCPoly& p, std::size_t line, std::size_t column) {
    Vector v = zero_vector(L.dim());
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != 1) {
            throw ParseError(line, column, "not a linear combination of basis symbols");
        }
        v[w[0]] = c;
    }
    return v;
}

struct LineCursor {
    std::size_t number;
    std::string text;
};

// Builds a LieAlgebra with only names known, so expressions can be parsed
// before the bracket table exists.
LieAlgebra names_only(const std::string& name, const std::vector<std::string>& basis) {
    std::vector<Vector> table(basis.size() * basis.size(), zero_vector(basis.size()));
    return LieAlgebra(name, basis, std::move(table));
}

}  // namespace

NCPoly parse_expression(const LieAlgebra& L, std::string_view text) {
    return ExpressionParser(L, text, 1, 0).parse();
}

Vector parse_vector(const LieAlgebra& L, std::string_view text) {
    return to_vector(L, parse_expression(L, text), 1, 1);
}

std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

ParsedAlgebra parse_algebra(std::string_view text) {
    std::vector<LineCursor> lines;
    {
        std::istringstream in{std::string(text)};
        std::string s;
        std::size_t n = 0;
        while (std::getline(in, s)) {
            ++n;
            const std::string t = trim(s);
            if (!t.empty() && t[0] != '#') {
                lines.push_back({n, s});
            }
        }
    }
    auto keyword = [](const LineCursor& l, const std::string& kw) -> std::optional<std::size_t> {
        const std::size_t b = l.text.find_first_not_of(" \t");
        if (l.text.compare(b, kw.size(), kw) == 0 &&
            (b + kw.size() == l.text.size() || std::isspace(static_cast<unsigned char>(l.text[b + kw.size()])))) {
            return b + kw.size();
        }
        return std::nullopt;
    };
    if (lines.empty()) {
        throw ParseError(1, 1, "empty algebra file");
    }
    const auto name_at = keyword(lines[0], "algebra");
    if (!name_at) {
        throw ParseError(lines[0].number, 1, "expected 'algebra <name>'");
    }
    const std::string name = trim(std::string_view(lines[0].text).substr(*name_at));
    if (name.empty()) {
        throw ParseError(lines[0].number, *name_at + 1, "missing algebra name");
    }
    if (lines.size() < 2 || !keyword(lines[1], "basis")) {
        throw ParseError(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, 1, "expected 'basis <sym> ...'");
    }
    std::vector<std::string> basis;
    {
        const std::string& s = lines[1].text;
        std::size_t i = *keyword(lines[1], "basis");
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            if (!ident_start(s[i])) {
                throw ParseError(lines[1].number, i + 1, "invalid basis symbol");
            }
            while (i < s.size() && ident_char(s[i])) {
                ++i;
            }
            const std::string sym = s.substr(start, i - start);
            if (std::find(basis.begin(), basis.end(), sym) != basis.end()) {
                throw ParseError(lines[1].number, start + 1, "duplicate basis symbol '" + sym + "'");
            }
            basis.push_back(sym);
        }
        if (basis.empty()) {
            throw ParseError(lines[1].number, s.size() + 1, "empty basis");
        }
    }
    const std::size_t n = basis.size();
    const LieAlgebra names = names_only(name, basis);

    std::map<std::pair<std::size_t, std::size_t>, std::pair<Vector, std::size_t>> given;
    std::vector<std::optional<std::vector<long long>>> grades(n);
    std::size_t grade_lines = 0;

    auto symbol_at = [&](const LineCursor& l, std::size_t& i) -> std::size_t {
        while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < l.text.size() && ident_char(l.text[i])) {
            ++i;
        }
        const std::string sym = l.text.substr(start, i - start);
        if (sym.empty()) {
            throw ParseError(l.number, start + 1, "expected a basis symbol");
        }
        const auto idx = names.index_of(sym);
        if (!idx) {
            throw ParseError(l.number, start + 1, "unknown symbol '" + sym + "'");
        }
        return *idx;
    };
    auto expect = [](const LineCursor& l, std::size_t& i, char c) {
        while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) {
            ++i;
        }
        if (i >= l.text.size() || l.text[i] != c) {
            throw ParseError(l.number, i + 1, std::string("expected '") + c + "'");
        }
        ++i;
    };

    for (std::size_t li = 2; li < lines.size(); ++li) {
        const LineCursor& l = lines[li];
        if (auto at = keyword(l, "bracket")) {
            std::size_t i = *at;
            expect(l, i, '[');
            const std::size_t a = symbol_at(l, i);
            expect(l, i, ',');
            const std::size_t b = symbol_at(l, i);
            expect(l, i, ']');
            expect(l, i, '=');
            const NCPoly rhs = ExpressionParser(names, std::string_view(l.text).substr(i), l.number, i).parse();
            const Vector v = to_vector(names, rhs, l.number, i + 1);
            if (a == b && !is_zero(v)) {
                throw ParseError(l.number, *at + 1, "[" + basis[a] + "," + basis[a] + "] must be 0");
            }
            auto check = [&](std::size_t p, std::size_t q, const Vector& w) {
                auto it = given.find({p, q});
                if (it != given.end() && it->second.first != w) {
                    throw ParseError(l.number, *at + 1,
                                     "contradicts the bracket on line " + std::to_string(it->second.second));
                }
                given[{p, q}] = {w, l.number};
            };
            check(a, b, v);
            check(b, a, Scalar(-1) * v);
        } else if (auto at2 = keyword(l, "grade")) {
            std::size_t i = *at2;
            const std::size_t a = symbol_at(l, i);
            expect(l, i, '=');
            expect(l, i, '(');
            std::vector<long long> deg;
            while (true) {
                while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) {
                    ++i;
                }
                const std::size_t start = i;
                if (i < l.text.size() && (l.text[i] == '-' || l.text[i] == '+')) {
                    ++i;
                }
                while (i < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[i]))) {
                    ++i;
                }
                try {
                    deg.push_back(std::stoll(l.text.substr(start, i - start)));
                } catch (const std::exception&) {
                    throw ParseError(l.number, start + 1, "expected an integer degree");
                }
                while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) {
                    ++i;
                }
                if (i < l.text.size() && l.text[i] == ',') {
                    ++i;
                    continue;
                }
                expect(l, i, ')');
                break;
            }
            if (grades[a]) {
                throw ParseError(l.number, *at2 + 1, "'" + basis[a] + "' graded twice");
            }
            if (grade_lines > 0) {
                for (const auto& g : grades) {
                    if (g && g->size() != deg.size()) {
                        throw ParseError(l.number, *at2 + 1, "degree has a different rank than earlier grades");
                    }
                }
            }
            grades[a] = std::move(deg);
            ++grade_lines;
        } else {
            throw ParseError(l.number, l.text.find_first_not_of(" \t") + 1,
                             "expected 'bracket' or 'grade'");
        }
    }

    std::vector<std::tuple<std::size_t, std::size_t, Vector>> brackets;
    for (const auto& [key, val] : given) {
        if (key.first < key.second) {
            brackets.emplace_back(key.first, key.second, val.first);
        }
    }
    ParsedAlgebra out;
    out.algebra = LieAlgebra::from_brackets(name, basis, brackets);
    if (grade_lines > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!grades[i]) {
                throw ParseError(lines.back().number, 1, "no grade given for '" + basis[i] + "'");
            }
        }
        Grading g;
        g.rank = grades[0]->size();
        for (auto& d : grades) {
            g.degrees.push_back(*d);
        }
        out.grading = std::move(g);
    }
    out.axioms = check_axioms(out.algebra);
    if (!out.axioms.verdict) {
        std::string where;
        for (const auto& [key, val] : given) {
            if (key.first < key.second) {
                where += (where.empty() ? "" : ", ") + std::to_string(val.second);
            }
        }
        out.axioms.details["bracket_lines"] = where;
        for (auto& w : out.axioms.witnesses) {
            // Name the defining lines of the brackets mentioned in the witness.
            std::string lines_used;
            for (const auto& [key, val] : given) {
                const std::string tag = "[" + basis[key.first] + "," + basis[key.second] + "]";
                if (key.first < key.second && w.find(tag) != std::string::npos) {
                    lines_used += (lines_used.empty() ? "" : ", ") + std::to_string(val.second);
                }
            }
            if (!lines_used.empty()) {
                w += " (brackets on lines " + lines_used + ")";
            }
        }
    }
    return out;
}

ParsedAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string format_algebra(const LieAlgebra& L, const std::optional<Grading>& grading) {
    std::string s = "algebra " + L.name() + "\nbasis";
    for (const auto& b : L.basis_names()) {
        s += " " + b;
    }
    s += "\n";
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            if (!is_zero(L.structure(i, j))) {
                s += "bracket [" + L.basis_names()[i] + "," + L.basis_names()[j] + "] = " + L.format(L.structure(i, j)) +
                     "\n";
            }
        }
    }
    if (grading) {
        for (std::size_t i = 0; i < L.dim(); ++i) {
            s += "grade " + L.basis_names()[i] + " = (";
            for (std::size_t k = 0; k < grading->degrees[i].size(); ++k) {
                s += (k ? "," : "") + std::to_string(grading->degrees[i][k]);
            }
            s += ")\n";
        }
    }
    return s;
}

Subspace parse_subspace(const LieAlgebra& L, const std::optional<Grading>& grading, std::string_view text) {
    const std::string t = trim(text);
    const std::size_t n = L.dim();
    if (t == "gplus" || t == "gminus" || t == "g0") {
        if (!grading) {
            throw InvalidArgument("'" + t + "' needs grade lines in the algebra file");
        }
        const Sign s = t == "gplus" ? Sign::positive : t == "gminus" ? Sign::negative : Sign::zero;
        return graded_part(L, *grading, s);
    }
    if (t == "0") {
        return Subspace(n);
    }
    if (t == "L") {
        return Subspace::whole(n);
    }
    if (t.rfind("span(", 0) == 0 && t.back() == ')') {
        std::vector<Vector> vs;
        for (const auto& item : split_top_level(std::string_view(t).substr(5, t.size() - 6))) {
            vs.push_back(parse_vector(L, item));
        }
        return Subspace::span(n, vs);
    }
    return Subspace::span(n, {parse_vector(L, t)});
}

FactorizationScheme parse_scheme(const LieAlgebra& L, const std::optional<Grading>& grading, std::string_view text) {
    FactorizationScheme s;
    for (const auto& item : split_top_level(text)) {
        if (item.empty()) {
            throw InvalidArgument("empty factor in scheme");
        }
        s.factors.push_back(parse_subspace(L, grading, item));
        s.labels.push_back(item);
    }
    return s;
}

Matrix parse_linear_map(const LieAlgebra& L, std::string_view text) {
    const auto items = split_top_level(text);
    if (items.size() != L.dim()) {
        throw InvalidArgument("a linear map needs " + std::to_string(L.dim()) + " images, got " +
                              std::to_string(items.size()));
    }
    std::vector<Vector> cols;
    for (const auto& item : items) {
        cols.push_back(parse_vector(L, item));
    }
    return Matrix::from_columns(cols, L.dim());
}

}  // namespace liepm
