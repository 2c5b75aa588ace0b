#include "liepm/xyx.hpp"

#include "liepm/errors.hpp"
#include "liepm/ladder.hpp"

namespace liepm {

std::size_t total_degree(const XYXMonomial& m) { return std::size_t{m[0]} + m[1] + m[2]; }

XYXMonomial canonical(const XYXMonomial& m) {
    return m[1] == 0 ? XYXMonomial{m[0] + m[2], 0, 0} : m;
}

std::size_t xyx_monomial_count(std::size_t d) {
    std::size_t n = 0;
    for (std::size_t k = 0; k <= d; ++k) {
        n += k * (k + 1) / 2 + 1;
    }
    return n;
}

std::size_t XYXPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms) {
        d = std::max(d, total_degree(m));
    }
    return d;
}

NCPoly XYXPoly::to_ncpoly() const {
    NCPoly out(x.size());
    for (const auto& [m, c] : terms) {
        out += c * (power(x, m[0]) * power(y, m[1]) * power(x, m[2]));
    }
    return out;
}

std::string format(const LieAlgebra& L, const XYXPoly& p) {
    if (p.terms.empty()) {
        return "0";
    }
    const std::string xs = "(" + L.format(p.x) + ")";
    const std::string ys = "(" + L.format(p.y) + ")";
    auto factor = [](const std::string& s, std::uint32_t e) {
        return e == 0 ? std::string{} : e == 1 ? s : s + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& [m, c] : p.terms) {
        if (out.empty()) {
            out += to_string(c);
        } else {
            out += c < 0 ? " - " + to_string(Scalar(-c)) : " + " + to_string(c);
        }
        std::string mono;
        for (const auto& part : {factor(xs, m[0]), factor(ys, m[1]), factor(xs, m[2])}) {
            if (!part.empty()) {
                mono += mono.empty() ? part : " " + part;
            }
        }
        out += " * " + (mono.empty() ? std::string("1") : mono);
    }
    return out;
}

XyxRewriter::XyxRewriter(const LieAlgebra& L, Vector x, Vector y)
    : L_(&L), x_(std::move(x)), y_(std::move(y)), nf_(L) {
    if (L.dim() != 3) {
        throw DimensionMismatch("XYX rewriting needs a three-dimensional Lie algebra");
    }
    if (x_.size() != 3 || y_.size() != 3) {
        throw DimensionMismatch("pair vectors must have length 3");
    }
    if (generated_subalgebra(L, {x_, y_}).dim() != 3) {
        throw NotGenerating("x = " + L.format(x_) + " and y = " + L.format(y_) + " do not generate " + L.name());
    }
}

const PBWPoly& XyxRewriter::column(const XYXMonomial& m) {
    if (auto it = column_cache_.find(m); it != column_cache_.end()) {
        return it->second;
    }
    PBWPoly value;
    if (m[0] > 0) {
        value = nf_.left_multiply(x_, column({m[0] - 1, m[1], m[2]}));
    } else if (m[1] > 0) {
        value = nf_.left_multiply(y_, column({0, m[1] - 1, m[2]}));
    } else {
        value = nf_.power(x_, m[2]);
    }
    return column_cache_.emplace(m, std::move(value)).first->second;
}

void XyxRewriter::extend_columns(std::size_t d) {
    while (degree_end_.size() <= d) {
        const auto deg = static_cast<std::uint32_t>(degree_end_.size());
        for (std::uint32_t i = 0; i <= deg; ++i) {
            for (std::uint32_t j = 0; i + j <= deg; ++j) {
                const XYXMonomial m{i, j, deg - i - j};
                if (canonical(m) != m) {
                    continue;
                }
                columns_.insert(column(m).terms());
                column_keys_.push_back(m);
            }
        }
        degree_end_.push_back(column_keys_.size());
    }
}

std::size_t XyxRewriter::rank(std::size_t d) {
    extend_columns(d);
    return columns_.rows_before(degree_end_[d]);
}

std::size_t XyxRewriter::free_variables(std::size_t d) {
    extend_columns(d);
    std::size_t n = 0;
    for (const auto& [index, combo] : columns_.dependencies()) {
        if (index < degree_end_[d]) {
            ++n;
        }
    }
    return n;
}

PBWPoly XyxRewriter::normal_form(const XYXPoly& p) {
    PBWPoly out(3);
    for (const auto& [m, c] : p.terms) {
        axpy(out.mutable_terms(), c, column(m).terms());
    }
    return out;
}

std::size_t XyxRewriter::covered(std::size_t d, std::size_t column_degree) {
    extend_columns(column_degree);
    const std::size_t rows = columns_.rows_before(degree_end_[column_degree]);
    std::size_t n = 0;
    for (const auto& e : pbw_monomials(3, d)) {
        SparseVector<Exponents> v;
        v.emplace(e, 1);
        if (columns_.reduce(std::move(v), rows).residual.empty()) {
            ++n;
        }
    }
    return n;
}

XYXPoly XyxRewriter::rewrite_linear(const NCPoly& p) {
    const PBWPoly target = nf_.normal_form(p);
    const std::size_t bound = 2 * target.degree() + 2;
    for (std::size_t d = target.degree();; ++d) {
        extend_columns(d);
        auto r = columns_.reduce(target.terms(), columns_.rows_before(degree_end_[d]));
        if (r.residual.empty()) {
            XYXPoly out{x_, y_, {}};
            for (const auto& [index, c] : r.combination) {
                add_term(out.terms, column_keys_.at(index), c);
            }
            return out;
        }
        if (d == bound) {
            throw NoSolution("no XYX expression of degree <= " + std::to_string(d) + " for " +
                             format(*L_, target) + "; residual contains " +
                             format(*L_, PBWPoly::monomial(r.residual.begin()->first)));
        }
    }
}

void XyxRewriter::prepare_recursive() {
    if (recursive_ready_) {
        return;
    }
    z_ = bracket(*L_, x_, y_);
    const Matrix basis = Matrix::from_columns({x_, y_, z_}, 3);
    const auto inv = inverse(basis);
    if (!inv) {
        throw DegenerateBasis("x, y and [x,y] = " + L_->format(z_) + " are linearly dependent");
    }
    const Vector zx = *inv * bracket(*L_, z_, x_);
    a_ = zx[0];
    b_ = zx[1];
    c_ = zx[2];
    letter_coords_.clear();
    for (std::size_t i = 0; i < 3; ++i) {
        letter_coords_.push_back(*inv * L_->unit(i));
    }
    recursive_ready_ = true;
}

SparseVector<XYXMonomial> XyxRewriter::mul_x(const SparseVector<XYXMonomial>& p) const {
    SparseVector<XYXMonomial> out;
    for (const auto& [m, c] : p) {
        out.emplace(canonical(XYXMonomial{m[0] + 1, m[1], m[2]}), c);
    }
    return out;
}

SparseVector<XYXMonomial> XyxRewriter::mul_y(const SparseVector<XYXMonomial>& p) {
    SparseVector<XYXMonomial> out;
    for (const auto& [m, c] : p) {
        axpy(out, c, mul_y(m));
    }
    return out;
}

SparseVector<XYXMonomial> XyxRewriter::mul_z(const SparseVector<XYXMonomial>& p) {
    SparseVector<XYXMonomial> out;
    for (const auto& [m, c] : p) {
        axpy(out, c, mul_z(m));
    }
    return out;
}

// y x^l y^m x^n = x (y x^(l-1) y^m x^n) - z x^(l-1) y^m x^n.
const SparseVector<XYXMonomial>& XyxRewriter::mul_y(const XYXMonomial& m) {
    if (auto it = y_memo_.find(m); it != y_memo_.end()) {
        return it->second;
    }
    SparseVector<XYXMonomial> out;
    if (m[0] == 0) {
        out.emplace(XYXMonomial{0, m[1] + 1, m[2]}, 1);
    } else {
        const XYXMonomial lower{m[0] - 1, m[1], m[2]};
        out = mul_x(mul_y(lower));
        axpy(out, Scalar(-1), mul_z(lower));
    }
    return y_memo_.insert_or_assign(m, std::move(out)).first->second;
}

// l = 0: z y^m x^n = x y^(m+1) x^n - (y x y^m) x^n with y x y^m taken from (A_m).
// l > 0: z x T = (x z + a x + b y + c z) T for T = x^(l-1) y^m x^n.
const SparseVector<XYXMonomial>& XyxRewriter::mul_z(const XYXMonomial& m) {
    if (auto it = z_memo_.find(m); it != z_memo_.end()) {
        return it->second;
    }
    SparseVector<XYXMonomial> out;
    if (m[0] == 0) {
        const std::uint32_t k = m[1];
        const std::uint32_t n = m[2];
        const Scalar kk(k);
        add_term(out, XYXMonomial{1, k + 1, n}, Scalar(1));
        add_term(out, XYXMonomial{1, k + 1, n}, -kk / (kk + 1));
        add_term(out, XYXMonomial{0, k + 1, n + 1}, -1 / (kk + 1));
        for (const auto& [t, c] : correction(k)) {
            add_term(out, canonical(XYXMonomial{t[0], t[1], t[2] + n}), Scalar(-c));
        }
    } else {
        const XYXMonomial lower{m[0] - 1, m[1], m[2]};
        SparseVector<XYXMonomial> t;
        t.emplace(lower, 1);
        out = mul_x(mul_z(lower));
        axpy(out, a_, mul_x(t));
        axpy(out, b_, mul_y(lower));
        axpy(out, c_, mul_z(lower));
    }
    return z_memo_.insert_or_assign(m, std::move(out)).first->second;
}

// XYX form of y x y^k - k/(k+1) x y^(k+1) - 1/(k+1) y^(k+1) x. Its filtration
// degree is at most k, so the recursion only reaches smaller k.
const SparseVector<XYXMonomial>& XyxRewriter::correction(std::uint32_t k) {
    if (auto it = correction_memo_.find(k); it != correction_memo_.end()) {
        return it->second;
    }
    const NCPoly r = ak_correction(nf_, x_, y_, k).to_ncpoly();
    SparseVector<XYXMonomial> out;
    for (const auto& [w, c] : r.terms()) {
        SparseVector<XYXMonomial> acc;
        acc.emplace(XYXMonomial{0, 0, 0}, 1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            acc = apply_letter(*it, acc);
        }
        axpy(out, c, acc);
    }
    return correction_memo_.insert_or_assign(k, std::move(out)).first->second;
}

SparseVector<XYXMonomial> XyxRewriter::apply_letter(std::size_t letter, const SparseVector<XYXMonomial>& p) {
    const Vector& coords = letter_coords_.at(letter);
    SparseVector<XYXMonomial> out;
    if (coords[0] != 0) {
        axpy(out, coords[0], mul_x(p));
    }
    if (coords[1] != 0) {
        axpy(out, coords[1], mul_y(p));
    }
    if (coords[2] != 0) {
        axpy(out, coords[2], mul_z(p));
    }
    return out;
}

XYXPoly XyxRewriter::rewrite_recursive(const NCPoly& p) {
    if (p.letters() != 3) {
        throw DimensionMismatch("polynomial is over a different number of letters");
    }
    prepare_recursive();
    XYXPoly out{x_, y_, {}};
    for (const auto& [w, c] : p.terms()) {
        SparseVector<XYXMonomial> acc;
        acc.emplace(XYXMonomial{0, 0, 0}, 1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            acc = apply_letter(*it, acc);
        }
        axpy(out.terms, c, acc);
    }
    return out;
}

XYXPoly xyx_rewrite_linear(const LieAlgebra& L, const Vector& x, const Vector& y, const NCPoly& p) {
    XyxRewriter r(L, x, y);
    return r.rewrite_linear(p);
}

XYXPoly xyx_rewrite_recursive(const LieAlgebra& L, const Vector& x, const Vector& y, const NCPoly& p) {
    XyxRewriter r(L, x, y);
    return r.rewrite_recursive(p);
}

}  // namespace liepm
