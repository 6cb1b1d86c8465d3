#pragma once

// Scenario documents: one `key = value` pair per line, `#` starts a comment
// line, blank lines are ignored.
//
//     version = 1
//     base_rate = 0.4          (also "40%" or "2/5")
//     hit_rate = 80%
//     false_alarm_rate = 1/10
//     population = 100         (optional)
//     threshold = 0.5          (optional)
//     hypothesis_label = runs on Main Street
//     evidence_label = is blue
//
// Only the three rates are required. Labels run to the end of the line, so a
// `#` inside a label is kept as text.

#include "bayesproof/error.hpp"
#include "bayesproof/probability.hpp"
#include "bayesproof/rational.hpp"
#include "bayesproof/scenario.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace bayesproof {

inline constexpr int scenario_format_version = 1;

struct ScenarioDocument {
    int format_version = scenario_format_version;
    Scenario scenario;
    std::optional<std::int64_t> population;
    std::optional<Probability> threshold;

    friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;
};

/// A label survives a write/parse cycle only if it is one non-empty line
/// without surrounding whitespace.
inline bool is_valid_label(std::string_view label) {
    return !label.empty() && label == detail::trim(label) &&
           label.find_first_of("\r\n") == std::string_view::npos;
}

namespace detail {

inline Probability parse_probability_value(std::string_view key, std::string_view value, std::size_t line) {
    auto r = parse_rational(value);
    if (!r) throw SyntaxError("'" + std::string{key} + "' expects a decimal, percentage or fraction, got '" +
                                  std::string{value} + "'",
                              line);
    if (*r < 0 || *r > 1)
        throw RangeError("'" + std::string{key} + "' = " + std::string{value} + " is outside [0, 1]", line);
    return Probability{*r};
}

inline std::int64_t parse_integer_value(std::string_view key, std::string_view value, std::size_t line) {
    std::string_view digits = value;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits))
        throw SyntaxError("'" + std::string{key} + "' expects an integer, got '" + std::string{value} + "'", line);
    Integer n = parse_digits(digits);
    if (negative) n = -n;
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw RangeError("'" + std::string{key} + "' = " + std::string{value} + " is too large", line);
    return n.convert_to<std::int64_t>();
}

} // namespace detail

/// Parses and validates a scenario document. Errors carry the offending
/// line number where there is one: SyntaxError, DuplicateKey, RangeError.
/// A required rate that never appears raises MissingKey.
inline ScenarioDocument parse_scenario(std::string_view text) {
    ScenarioDocument doc;
    std::optional<Probability> base_rate, hit_rate, false_alarm_rate;
    std::optional<std::string> hypothesis_label, evidence_label;
    std::set<std::string, std::less<>> seen;

    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        std::size_t end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw SyntaxError("expected 'key = value', got '" + std::string{line} + "'", line_number);
        std::string_view key = detail::trim(line.substr(0, eq));
        std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw SyntaxError("missing key before '='", line_number);
        if (value.empty()) throw SyntaxError("missing value for '" + std::string{key} + "'", line_number);

        auto check_duplicate = [&] {
            if (!seen.insert(std::string{key}).second) throw DuplicateKey(std::string{key}, line_number);
        };

        if (key == "version") {
            check_duplicate();
            auto v = detail::parse_integer_value(key, value, line_number);
            if (v != scenario_format_version)
                throw RangeError("unsupported format version " + std::string{value} + " (expected 1)", line_number);
            doc.format_version = static_cast<int>(v);
        } else if (key == "base_rate") {
            check_duplicate();
            base_rate = detail::parse_probability_value(key, value, line_number);
        } else if (key == "hit_rate") {
            check_duplicate();
            hit_rate = detail::parse_probability_value(key, value, line_number);
        } else if (key == "false_alarm_rate") {
            check_duplicate();
            false_alarm_rate = detail::parse_probability_value(key, value, line_number);
        } else if (key == "threshold") {
            check_duplicate();
            doc.threshold = detail::parse_probability_value(key, value, line_number);
        } else if (key == "population") {
            check_duplicate();
            auto n = detail::parse_integer_value(key, value, line_number);
            if (n < 1) throw RangeError("population must be at least 1, got " + std::string{value}, line_number);
            doc.population = n;
        } else if (key == "hypothesis_label") {
            check_duplicate();
            hypothesis_label = std::string{value};
        } else if (key == "evidence_label") {
            check_duplicate();
            evidence_label = std::string{value};
        } else {
            throw SyntaxError("unknown key '" + std::string{key} + "'", line_number);
        }
    }

    if (!base_rate) throw MissingKey("base_rate");
    if (!hit_rate) throw MissingKey("hit_rate");
    if (!false_alarm_rate) throw MissingKey("false_alarm_rate");

    doc.scenario.base_rate = *base_rate;
    doc.scenario.hit_rate = *hit_rate;
    doc.scenario.false_alarm_rate = *false_alarm_rate;
    if (hypothesis_label) doc.scenario.hypothesis_label = *hypothesis_label;
    if (evidence_label) doc.scenario.evidence_label = *evidence_label;
    return doc;
}

/// Writes a document that parse_scenario reads back unchanged. Rates are
/// written exactly: as decimals when they terminate, otherwise as fractions.
/// Throws RangeError for labels that could not survive the trip.
inline std::string serialize_scenario(const ScenarioDocument& doc) {
    const Scenario& s = doc.scenario;
    if (!is_valid_label(s.hypothesis_label) || !is_valid_label(s.evidence_label))
        throw RangeError("labels must be single, non-empty lines without surrounding whitespace");
    std::ostringstream out;
    out << "version = " << doc.format_version << '\n'
        << "base_rate = " << to_exact_string(s.base_rate) << '\n'
        << "hit_rate = " << to_exact_string(s.hit_rate) << '\n'
        << "false_alarm_rate = " << to_exact_string(s.false_alarm_rate) << '\n';
    if (doc.population) out << "population = " << *doc.population << '\n';
    if (doc.threshold) out << "threshold = " << to_exact_string(*doc.threshold) << '\n';
    out << "hypothesis_label = " << s.hypothesis_label << '\n'
        << "evidence_label = " << s.evidence_label << '\n';
    return out.str();
}

} // namespace bayesproof
