#pragma once

#include <map>

#include "liepm/matrix.hpp"
#include "liepm/uea.hpp"

namespace liepm::testing {

/// Word rewriting straight from the defining relation: repeatedly replace the
/// first descent b_a b_b (a > b) by b_b b_a + [b_a, b_b]. Slow and simple.
inline PBWPoly naive_normal_form(const LieAlgebra& L, const NCPoly& p) {
    std::map<Word, Scalar> work(p.terms().begin(), p.terms().end());
    std::map<Word, Scalar> done;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word w = node.key();
        const Scalar c = node.mapped();
        std::size_t pos = 0;
        while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) {
            ++pos;
        }
        if (pos + 1 >= w.size()) {
            add_term(done, w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        add_term(work, swapped, c);
        const Vector& br = L.structure(w[pos], w[pos + 1]);
        for (std::size_t k = 0; k < br.size(); ++k) {
            if (br[k] == 0) {
                continue;
            }
            Word shorter(w.begin(), w.begin() + pos);
            shorter.push_back(static_cast<std::uint32_t>(k));
            shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
            add_term(work, shorter, c * br[k]);
        }
    }
    PBWPoly out(L.dim());
    for (const auto& [w, c] : done) {
        Exponents e(L.dim(), 0);
        for (auto l : w) {
            ++e[l];
        }
        out.add(e, c);
    }
    return out;
}

/// Dense rank of a family of PBW polynomials over the monomials of degree <= d.
inline std::size_t dense_rank(const std::vector<PBWPoly>& polys, std::size_t dim, std::size_t d) {
    const auto monomials = pbw_monomials(dim, d);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index[monomials[i]] = i;
    }
    Matrix m(polys.size(), monomials.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [e, c] : polys[r].terms()) {
            m(r, index.at(e)) = c;
        }
    }
    return rank(m);
}

}  // namespace liepm::testing
