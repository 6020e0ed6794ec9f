/*
 * rational.hpp — exact rational arithmetic for index-window checks.
 *
 * The admissibility windows for (alpha, p, s, r) are systems of rational
 * inequalities.  Evaluating them in floating point risks misclassifying
 * boundary cases (p = 4/(2-alpha), s at a window endpoint), so every
 * window test in the library goes through this type.
 */

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qglab {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline std::int64_t checked(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("Rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}
}  // namespace detail

inline Rational operator+(Rational a, Rational b) {
    __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rational(detail::checked(n, "+"), detail::checked(d, "+"));
}
inline Rational operator-(Rational a, Rational b) {
    __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return Rational(detail::checked(n, "-"), detail::checked(d, "-"));
}
inline Rational operator*(Rational a, Rational b) {
    // cross-reduce first to keep magnitudes small
    std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    __int128 n = static_cast<__int128>(a.num / g1) * (b.num / g2);
    __int128 d = static_cast<__int128>(a.den / g2) * (b.den / g1);
    return Rational(detail::checked(n, "*"), detail::checked(d, "*"));
}
inline Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den, b.num);
}
inline Rational operator-(Rational a) { return Rational(-a.num, a.den); }

inline bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator>(Rational a, Rational b) { return b < a; }
inline bool operator<=(Rational a, Rational b) { return !(b < a); }
inline bool operator>=(Rational a, Rational b) { return !(a < b); }

inline Rational rational_min(Rational a, Rational b) { return a < b ? a : b; }
inline Rational rational_max(Rational a, Rational b) { return a < b ? b : a; }

// Parses "a/b" or a plain integer.  Decimal strings ("1.05") are accepted
// and converted exactly (they are finite base-10 fractions).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len > 15) throw std::invalid_argument("parse_rational: too many decimals: " + text);
        std::int64_t n = std::stoll(digits);
        std::int64_t d = 1;
        for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
        return Rational(n, d);
    }
    return Rational(std::stoll(text));
}

}  // namespace qglab
