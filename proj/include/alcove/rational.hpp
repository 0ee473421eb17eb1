#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Under C++20 the mixed rational<long>/int comparison templates in boost recurse through
// rewritten candidates; exact-match overloads take precedence.
namespace boost {
#define ALCOVE_RATIONAL_CMP(op)                                                                    \
    inline bool operator op(const rational<std::int64_t>& a, int b) { return a op rational<std::int64_t>(b); } \
    inline bool operator op(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) op b; }
ALCOVE_RATIONAL_CMP(==)
ALCOVE_RATIONAL_CMP(!=)
ALCOVE_RATIONAL_CMP(<)
ALCOVE_RATIONAL_CMP(>)
ALCOVE_RATIONAL_CMP(<=)
ALCOVE_RATIONAL_CMP(>=)
#undef ALCOVE_RATIONAL_CMP
}  // namespace boost

namespace alcove {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline Integer floor_of(const Rational& r) {
    Integer q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Integer {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t pos = 0;
        Integer v = std::stoll(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

inline RationalVector to_rational(const IntVector& v) {
    return RationalVector(v.begin(), v.end());
}

inline bool all_integer(const RationalVector& v) {
    for (const auto& x : v)
        if (!is_integer(x)) return false;
    return true;
}

inline IntVector to_integer(const RationalVector& v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integer(x)) throw std::domain_error("non-integral entry " + to_string(x));
        out.push_back(x.numerator());
    }
    return out;
}

inline Integer content(const IntVector& v) {
    Integer g = 0;
    for (Integer x : v) g = std::gcd(g, x);
    return g;
}

inline Integer common_denominator(const RationalVector& v) {
    Integer d = 1;
    for (const auto& x : v) d = std::lcm(d, x.denominator());
    return d;
}

// Elementwise vector arithmetic shared by weights and coroot vectors.
template <class T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

template <class T>
std::vector<T> operator-(const std::vector<T>& a) {
    std::vector<T> out(a);
    for (auto& x : out) x = -x;
    return out;
}

template <class T, class S>
std::vector<T> scale(const std::vector<T>& a, const S& s) {
    std::vector<T> out(a);
    for (auto& x : out) x *= s;
    return out;
}

template <class T>
bool is_zero(const std::vector<T>& a) {
    for (const auto& x : a)
        if (x != T(0)) return false;
    return true;
}

}  // namespace alcove
