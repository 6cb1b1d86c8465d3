#pragma once

#include "bayesproof/error.hpp"
#include "bayesproof/probability.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace bayesproof {

/// The three-number evidence model: how common the hypothesis is, and how
/// often the evidence shows up with and without it. Labels are display-only.
struct Scenario {
    Probability base_rate;         // p(H)
    Probability hit_rate;          // p(E | H)
    Probability false_alarm_rate;  // p(E | not H)
    std::string hypothesis_label = "runs on Main Street";
    std::string evidence_label = "is blue";

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class Parameter { BaseRate, HitRate, FalseAlarmRate };

inline constexpr std::array<Parameter, 3> all_parameters{
    Parameter::BaseRate, Parameter::HitRate, Parameter::FalseAlarmRate};

inline const char* to_string(Parameter p) noexcept {
    switch (p) {
    case Parameter::BaseRate: return "base_rate";
    case Parameter::HitRate: return "hit_rate";
    case Parameter::FalseAlarmRate: return "false_alarm_rate";
    }
    return "?";
}

inline std::optional<Parameter> parse_parameter(std::string_view name) {
    for (Parameter p : all_parameters)
        if (name == to_string(p)) return p;
    return std::nullopt;
}

inline const Probability& get(const Scenario& s, Parameter p) {
    switch (p) {
    case Parameter::BaseRate: return s.base_rate;
    case Parameter::HitRate: return s.hit_rate;
    case Parameter::FalseAlarmRate: break;
    }
    return s.false_alarm_rate;
}

/// Copy of `s` with one rate replaced.
inline Scenario with(Scenario s, Parameter p, Probability value) {
    switch (p) {
    case Parameter::BaseRate: s.base_rate = std::move(value); break;
    case Parameter::HitRate: s.hit_rate = std::move(value); break;
    case Parameter::FalseAlarmRate: s.false_alarm_rate = std::move(value); break;
    }
    return s;
}

/// Scenario from three exact rationals; throws RangeError when any is
/// outside [0, 1].
inline Scenario make_scenario(const Rational& base_rate, const Rational& hit_rate,
                              const Rational& false_alarm_rate) {
    return Scenario{Probability{base_rate}, Probability{hit_rate}, Probability{false_alarm_rate}};
}

/// Convenience for literals written as decimals, e.g. make_scenario("0.4", "0.8", "0.1").
inline Scenario make_scenario(std::string_view base_rate, std::string_view hit_rate,
                              std::string_view false_alarm_rate) {
    auto parse = [](std::string_view text) {
        auto p = Probability::parse(text);
        if (!p) throw RangeError("not a probability: '" + std::string{text} + "'");
        return *p;
    };
    return Scenario{parse(base_rate), parse(hit_rate), parse(false_alarm_rate)};
}

} // namespace bayesproof
