#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liepm {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Dense coordinate vector over a fixed basis.
using Vector = std::vector<Scalar>;

/// Sparse vector keyed by any totally ordered key; zero entries are never stored.
template <class Key>
using SparseVector = std::map<Key, Scalar>;

/// Parses "p", "-p" or "p/q". Throws InvalidArgument on anything else, including q = 0.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

/// Exact square root when s is the square of a rational.
std::optional<Scalar> rational_sqrt(const Scalar& s);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
std::string to_string(const Vector& v);

/// c * term, added into acc; keeps acc free of zeros.
template <class Key>
void axpy(SparseVector<Key>& acc, const Scalar& c, const SparseVector<Key>& term) {
    if (c == 0) {
        return;
    }
    for (const auto& [key, value] : term) {
        auto [it, inserted] = acc.try_emplace(key, 0);
        it->second += c * value;
        if (it->second == 0) {
            acc.erase(it);
        }
    }
}

template <class Key>
void add_term(SparseVector<Key>& acc, const Key& key, const Scalar& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = acc.try_emplace(key, 0);
    it->second += c;
    if (it->second == 0) {
        acc.erase(it);
    }
}

}  // namespace liepm
