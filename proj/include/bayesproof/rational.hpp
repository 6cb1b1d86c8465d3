#pragma once

// Exact rational arithmetic helpers. The rational type itself is Boost's
// arbitrary-precision cpp_rational; this header adds the parsing and the
// exact decimal formatting the rest of the library relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace bayesproof {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first
inline Integer parse_digits(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return Integer{0};
    return Integer{std::string{digits.substr(first)}};
}

inline Integer pow10(std::size_t n) {
    Integer p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 10;
    return p;
}

inline Rational pow10r(int e) {
    return e >= 0 ? Rational{pow10(static_cast<std::size_t>(e))}
                  : Rational{Integer{1}, pow10(static_cast<std::size_t>(-e))};
}

// [+-]digits[.digits] | [+-].digits
inline std::optional<Rational> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view whole = s;
    std::string_view frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        whole = s.substr(0, dot);
        frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!frac.empty() && !all_digits(frac)) return std::nullopt;
        if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    } else if (!all_digits(whole)) {
        return std::nullopt;
    }
    std::string digits{whole};
    digits += frac;
    Rational value{parse_digits(digits), pow10(frac.size())};
    return negative ? Rational{-value} : value;
}

} // namespace detail

inline bool is_integral(const Rational& r) {
    return denominator(r) == 1;
}

inline Integer floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return q;
}

/// Nearest integer, halves rounded away from zero.
inline Integer round_half_away(const Rational& r) {
    if (r < 0) return -floor(Rational{-r} + Rational{1, 2});
    return floor(r + Rational{1, 2});
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

/// Parses "0.4", "40%", "12.5%" or "2/5" into an exact rational.
/// Returns nullopt on anything else; range checks are the caller's job.
inline std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) return std::nullopt;
    if (s.back() == '%') {
        auto number = detail::parse_decimal(detail::trim(s.substr(0, s.size() - 1)));
        if (!number) return std::nullopt;
        return Rational{*number / 100};
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = detail::trim(s.substr(0, slash));
        std::string_view den = detail::trim(s.substr(slash + 1));
        bool negative = false;
        if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
        Integer d = detail::parse_digits(den);
        if (d == 0) return std::nullopt;
        Integer n = detail::parse_digits(num);
        return Rational{negative ? Integer{-n} : n, d};
    }
    return detail::parse_decimal(s);
}

/// "16/19", or just "3" for integers.
inline std::string to_fraction_string(const Rational& r) {
    if (is_integral(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Exact, shortest textual form: a terminating decimal when one exists
/// ("0.4", "0.95"), otherwise a fraction ("1/3"). parse_rational inverts it.
inline std::string to_exact_string(const Rational& r) {
    Integer den = denominator(r);
    std::size_t twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return to_fraction_string(r);
    std::size_t places = twos > fives ? twos : fives;
    if (places == 0) return numerator(r).str();
    Integer scaled = numerator(r * Rational{detail::pow10(places)});
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return negative ? "-" + digits : digits;
}

/// Fixed-point rendering with `decimals` places, halves away from zero.
/// With `trim_zeros` trailing zeros (and a bare point) are dropped.
inline std::string to_fixed_string(const Rational& r, std::size_t decimals, bool trim_zeros = false) {
    Integer scaled = round_half_away(r * Rational{detail::pow10(decimals)});
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.str();
    if (decimals > 0) {
        if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
        digits.insert(digits.size() - decimals, ".");
        if (trim_zeros) {
            while (digits.back() == '0') digits.pop_back();
            if (digits.back() == '.') digits.pop_back();
        }
    }
    if (negative && scaled != 0) digits.insert(0, "-");
    return digits;
}

/// Fixed-notation rendering with exactly `significant` significant digits,
/// e.g. 16/19 -> "0.842105", 3/50 -> "0.0600000". Zero renders as "0" padded
/// to the same number of digits after the point.
inline std::string to_significant_string(const Rational& r, int significant) {
    if (significant < 1) significant = 1;
    if (r == 0) return to_fixed_string(r, static_cast<std::size_t>(significant - 1));
    Rational magnitude = r < 0 ? Rational{-r} : r;
    int exponent = 0;
    while (magnitude >= detail::pow10r(exponent + 1)) ++exponent;
    while (magnitude < detail::pow10r(exponent)) --exponent;
    // rounding can carry into a new leading digit (0.9999996 -> 1.00000)
    int decimals = significant - 1 - exponent;
    Integer rounded = round_half_away(magnitude * detail::pow10r(decimals));
    if (rounded >= detail::pow10(static_cast<std::size_t>(significant))) --decimals;
    return to_fixed_string(r, static_cast<std::size_t>(decimals < 0 ? 0 : decimals));
}

} // namespace bayesproof
