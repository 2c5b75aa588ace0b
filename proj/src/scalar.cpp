#include "liepm/scalar.hpp"

#include <cctype>

#include "liepm/errors.hpp"

namespace liepm {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return std::string(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
    }
    mpz_class n(strip_plus(num));
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
        }
        d = mpz_class(std::string(den));
        if (d == 0) {
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        }
    }
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::optional<Scalar> rational_sqrt(const Scalar& s) {
    if (s < 0) {
        return std::nullopt;
    }
    if (mpz_perfect_square_p(s.get_num_mpz_t()) == 0 || mpz_perfect_square_p(s.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class n = sqrt(mpz_class(s.get_num()));
    mpz_class d = sqrt(mpz_class(s.get_den()));
    return Scalar(n, d);
}

bool is_zero(const Vector& v) {
    for (const auto& c : v) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = c * v[i];
    }
    return out;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace liepm
