#include "liepm/uea.hpp"

#include <algorithm>
#include <numeric>

#include "liepm/errors.hpp"

namespace liepm {

NCPoly NCPoly::unit(std::size_t letters) { return word(letters, {}); }

NCPoly NCPoly::word(std::size_t letters, Word w, const Scalar& c) {
    for (auto l : w) {
        if (l >= letters) {
            throw DimensionMismatch("word letter out of range");
        }
    }
    NCPoly p(letters);
    p.add(w, c);
    return p;
}

NCPoly NCPoly::embed(const Vector& v) {
    NCPoly p(v.size());
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        p.add(Word{i}, v[i]);
    }
    return p;
}

std::size_t NCPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) {
        d = std::max(d, w.size());
    }
    return d;
}

void NCPoly::add(const Word& w, const Scalar& c) { add_term(terms_, w, c); }

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (o.letters_ != letters_) {
        throw DimensionMismatch("polynomials over different algebras");
    }
    axpy(terms_, Scalar(1), o.terms_);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (o.letters_ != letters_) {
        throw DimensionMismatch("polynomials over different algebras");
    }
    axpy(terms_, Scalar(-1), o.terms_);
    return *this;
}

NCPoly operator*(const Scalar& c, NCPoly p) {
    if (c == 0) {
        return NCPoly(p.letters_);
    }
    for (auto& [w, v] : p.terms_) {
        v *= c;
    }
    return p;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
    if (p.letters_ != q.letters_) {
        throw DimensionMismatch("polynomials over different algebras");
    }
    NCPoly out(p.letters_);
    for (const auto& [wp, cp] : p.terms_) {
        for (const auto& [wq, cq] : q.terms_) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            out.add(w, cp * cq);
        }
    }
    return out;
}

NCPoly nc_multiply(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly embed(const Vector& v) { return NCPoly::embed(v); }

NCPoly power(const Vector& v, std::size_t n) {
    NCPoly out = NCPoly::unit(v.size());
    const NCPoly e = embed(v);
    for (std::size_t i = 0; i < n; ++i) {
        out = out * e;
    }
    return out;
}

std::size_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

PBWPoly PBWPoly::unit(std::size_t dim) { return monomial(Exponents(dim, 0)); }

PBWPoly PBWPoly::monomial(Exponents e, const Scalar& c) {
    PBWPoly p(e.size());
    p.add(e, c);
    return p;
}

std::size_t PBWPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, total_degree(e));
    }
    return d;
}

PBWPoly PBWPoly::homogeneous_part(std::size_t d) const {
    PBWPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == d) {
            out.terms_.emplace(e, c);
        }
    }
    return out;
}

void PBWPoly::add(const Exponents& e, const Scalar& c) {
    if (e.size() != dim_) {
        throw DimensionMismatch("exponent vector of wrong length");
    }
    add_term(terms_, e, c);
}

PBWPoly& PBWPoly::operator+=(const PBWPoly& o) {
    if (o.dim_ != dim_) {
        throw DimensionMismatch("polynomials over different algebras");
    }
    axpy(terms_, Scalar(1), o.terms_);
    return *this;
}

PBWPoly& PBWPoly::operator-=(const PBWPoly& o) {
    if (o.dim_ != dim_) {
        throw DimensionMismatch("polynomials over different algebras");
    }
    axpy(terms_, Scalar(-1), o.terms_);
    return *this;
}

PBWPoly operator*(const Scalar& c, PBWPoly p) {
    if (c == 0) {
        return PBWPoly(p.dim_);
    }
    for (auto& [e, v] : p.terms_) {
        v *= c;
    }
    return p;
}

NCPoly PBWPoly::to_ncpoly() const {
    NCPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        Word w;
        for (std::uint32_t i = 0; i < e.size(); ++i) {
            w.insert(w.end(), e[i], i);
        }
        out.add(w, c);
    }
    return out;
}

namespace {

std::string monomial_text(const LieAlgebra& L, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += L.basis_names().at(i);
        if (e[i] > 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string word_text(const LieAlgebra& L, const Word& w) {
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out += '*';
        }
        out += L.basis_names().at(w[i]);
    }
    return out;
}

template <class Key, class Render>
std::string join_terms(const SparseVector<Key>& terms, Render render) {
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [k, c] : terms) {
        if (out.empty()) {
            out += to_string(c);
        } else {
            out += c < 0 ? " - " + to_string(Scalar(-c)) : " + " + to_string(c);
        }
        out += " * " + render(k);
    }
    return out;
}

}  // namespace

std::string format(const LieAlgebra& L, const PBWPoly& p) {
    return join_terms(p.terms(), [&](const Exponents& e) { return monomial_text(L, e); });
}

std::string format(const LieAlgebra& L, const NCPoly& p) {
    return join_terms(p.terms(), [&](const Word& w) { return word_text(L, w); });
}

const PBWPoly& Normalizer::left_multiply_monomial(std::uint32_t letter, const Exponents& m) {
    const auto key = std::make_pair(letter, m);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    const std::size_t n = L_->dim();
    std::size_t first = 0;
    while (first < n && m[first] == 0) {
        ++first;
    }
    PBWPoly result(n);
    if (first == n || letter <= first) {
        Exponents bumped = m;
        ++bumped[letter];
        result.add(bumped, 1);
    } else {
        // b_j b_i^{m_i} rest = b_i (b_j b_i^{m_i - 1} rest) + [b_j, b_i] b_i^{m_i - 1} rest
        Exponents lowered = m;
        --lowered[first];
        const PBWPoly inner = left_multiply_monomial(letter, lowered);
        result = left_multiply(static_cast<std::uint32_t>(first), inner);
        const Vector& br = L_->structure(letter, first);
        for (std::uint32_t k = 0; k < n; ++k) {
            if (br[k] != 0) {
                axpy(result.mutable_terms(), br[k], left_multiply_monomial(k, lowered).terms());
            }
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

PBWPoly Normalizer::left_multiply(std::uint32_t letter, const PBWPoly& p) {
    if (letter >= L_->dim()) {
        throw DimensionMismatch("letter out of range");
    }
    PBWPoly out(L_->dim());
    for (const auto& [e, c] : p.terms()) {
        axpy(out.mutable_terms(), c, left_multiply_monomial(letter, e).terms());
    }
    return out;
}

PBWPoly Normalizer::left_multiply(const Vector& v, const PBWPoly& p) {
    if (v.size() != L_->dim()) {
        throw DimensionMismatch("vector length differs from dim");
    }
    PBWPoly out(L_->dim());
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            axpy(out.mutable_terms(), v[i], left_multiply(i, p).terms());
        }
    }
    return out;
}

PBWPoly Normalizer::normal_form(const Word& w) {
    PBWPoly acc = PBWPoly::unit(L_->dim());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = left_multiply(*it, acc);
    }
    return acc;
}

PBWPoly Normalizer::normal_form(const NCPoly& p) {
    if (p.letters() != L_->dim()) {
        throw DimensionMismatch("polynomial is over a different number of letters");
    }
    PBWPoly out(L_->dim());
    for (const auto& [w, c] : p.terms()) {
        axpy(out.mutable_terms(), c, normal_form(w).terms());
    }
    return out;
}

PBWPoly Normalizer::multiply(const PBWPoly& a, const PBWPoly& b) {
    PBWPoly out(L_->dim());
    for (const auto& [e, c] : a.terms()) {
        PBWPoly acc = b;
        for (std::size_t i = e.size(); i-- > 0;) {
            for (std::uint32_t t = 0; t < e[i]; ++t) {
                acc = left_multiply(static_cast<std::uint32_t>(i), acc);
            }
        }
        axpy(out.mutable_terms(), c, acc.terms());
    }
    return out;
}

PBWPoly Normalizer::power(const Vector& v, std::size_t n) {
    PBWPoly acc = PBWPoly::unit(L_->dim());
    for (std::size_t i = 0; i < n; ++i) {
        acc = left_multiply(v, acc);
    }
    return acc;
}

PBWPoly pbw_normal_form(const LieAlgebra& L, const NCPoly& p) {
    Normalizer nf(L);
    return nf.normal_form(p);
}

Certificate verify_identity(Normalizer& nf, const NCPoly& lhs, const NCPoly& rhs) {
    Certificate cert;
    cert.check = "identity";
    ScopedTimer timer(cert);
    const PBWPoly diff = nf.normal_form(lhs) - nf.normal_form(rhs);
    cert.verdict = diff.is_zero();
    if (!cert.verdict) {
        cert.witnesses.push_back("lhs - rhs = " + format(nf.algebra(), diff));
    }
    return cert;
}

Certificate verify_identity(const LieAlgebra& L, const NCPoly& lhs, const NCPoly& rhs) {
    Normalizer nf(L);
    return verify_identity(nf, lhs, rhs);
}

std::size_t pbw_count(std::size_t dim, std::size_t d) {
    // C(d + dim, dim), computed incrementally to stay exact.
    std::size_t c = 1;
    for (std::size_t i = 1; i <= dim; ++i) {
        c = c * (d + i) / i;
    }
    return c;
}

std::vector<Exponents> pbw_monomials(std::size_t dim, std::size_t d) {
    std::vector<Exponents> out;
    Exponents cur(dim, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t budget) -> void {
        if (pos == dim) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t k = 0; k <= budget; ++k) {
            cur[pos] = k;
            self(self, pos + 1, budget - k);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace liepm
