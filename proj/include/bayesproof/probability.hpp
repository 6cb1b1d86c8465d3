#pragma once

#include "bayesproof/error.hpp"
#include "bayesproof/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bayesproof {

/// An exact value in the closed unit interval.
class Probability {
public:
    Probability() = default;

    /// Throws RangeError when the value lies outside [0, 1].
    explicit Probability(Rational value) : value_(std::move(value)) {
        if (value_ < 0 || value_ > 1)
            throw RangeError("probability " + to_exact_string(value_) + " is outside [0, 1]");
    }

    Probability(long numerator, long denominator) : Probability(Rational{numerator, denominator}) {}

    /// Accepts "0.4", "40%" or "2/5". Returns nullopt on malformed text;
    /// still throws RangeError for well-formed values outside [0, 1].
    static std::optional<Probability> parse(std::string_view text) {
        auto r = parse_rational(text);
        if (!r) return std::nullopt;
        return Probability{*r};
    }

    static Probability zero() { return Probability{}; }
    static Probability one() { return Probability{Rational{1}}; }

    const Rational& value() const noexcept { return value_; }
    double to_double() const { return bayesproof::to_double(value_); }
    Probability complement() const { return Probability{Rational{1 - value_}}; }

    friend bool operator==(const Probability&, const Probability&) = default;
    friend std::strong_ordering operator<=>(const Probability& a, const Probability& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

inline std::string to_exact_string(const Probability& p) {
    return to_exact_string(p.value());
}

} // namespace bayesproof
