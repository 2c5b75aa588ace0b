#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "liepm/scalar.hpp"

namespace liepm {

/// Incremental echelon basis of sparse vectors.
///
/// Every stored row has a distinct pivot (its smallest key, normalized to 1) and
/// no entry at any key smaller than the pivot. Each row also remembers which
/// inserted vectors it is a combination of, so a successful reduction yields
/// the coefficients that express the reduced vector in the inserted generators.
/// Rows are kept in insertion order, which makes prefix queries meaningful:
/// the first r rows span exactly the generators inserted before row r+1 was
/// created.
template <class Key>
class EchelonBasis {
public:
    struct Reduction {
        SparseVector<Key> residual;
        /// generator index -> coefficient, such that
        /// input - residual = sum coefficient * generator.
        SparseVector<std::size_t> combination;
    };

    /// Inserts v; returns true iff v was independent of the current span.
    bool insert(const SparseVector<Key>& v) {
        const std::size_t index = inserted_++;
        Reduction r = reduce(v);
        if (r.residual.empty()) {
            dependencies_.emplace_back(index, std::move(r.combination));
            return false;
        }
        SparseVector<std::size_t> origin;
        origin[index] = 1;
        axpy(origin, Scalar(-1), r.combination);
        const Scalar lead = r.residual.begin()->second;
        const Scalar inv = 1 / lead;
        for (auto& [k, c] : r.residual) {
            c *= inv;
        }
        for (auto& [k, c] : origin) {
            c *= inv;
        }
        pivot_row_.emplace(r.residual.begin()->first, rows_.size());
        rows_.push_back(Row{std::move(r.residual), std::move(origin), index});
        return true;
    }

    /// Reduces v against the first row_limit rows (all rows by default).
    Reduction reduce(SparseVector<Key> v, std::size_t row_limit = std::numeric_limits<std::size_t>::max()) const {
        Reduction out;
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivot_row_.find(it->first);
            if (p == pivot_row_.end() || p->second >= row_limit) {
                ++it;
                continue;
            }
            const Key key = it->first;
            const Scalar c = it->second;
            const Row& row = rows_[p->second];
            axpy(v, -c, row.vec);
            axpy(out.combination, c, row.origin);
            it = v.upper_bound(key);
        }
        out.residual = std::move(v);
        return out;
    }

    bool contains(const SparseVector<Key>& v) const { return reduce(v).residual.empty(); }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t inserted() const noexcept { return inserted_; }

    /// Number of rows created by generators with index < generator_count.
    std::size_t rows_before(std::size_t generator_count) const {
        std::size_t n = 0;
        while (n < rows_.size() && rows_[n].generator < generator_count) {
            ++n;
        }
        return n;
    }

    /// Pivot of the most recently created row.
    const Key& last_pivot() const { return rows_.back().vec.begin()->first; }

    bool is_pivot(const Key& k) const { return pivot_row_.count(k) != 0; }

    std::vector<Key> pivots() const {
        std::vector<Key> out;
        out.reserve(pivot_row_.size());
        for (const auto& [k, r] : pivot_row_) {
            out.push_back(k);
        }
        return out;
    }

    /// Generators that were dependent when inserted, with their expression in
    /// earlier generators.
    const std::vector<std::pair<std::size_t, SparseVector<std::size_t>>>& dependencies() const noexcept {
        return dependencies_;
    }

    /// Row vectors in insertion order (echelon, not fully reduced).
    std::vector<SparseVector<Key>> rows() const {
        std::vector<SparseVector<Key>> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) {
            out.push_back(r.vec);
        }
        return out;
    }

private:
    struct Row {
        SparseVector<Key> vec;
        SparseVector<std::size_t> origin;
        std::size_t generator;
    };

    std::vector<Row> rows_;
    std::map<Key, std::size_t> pivot_row_;
    std::vector<std::pair<std::size_t, SparseVector<std::size_t>>> dependencies_;
    std::size_t inserted_ = 0;
};

}  // namespace liepm
