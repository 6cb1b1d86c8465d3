#pragma once

// Natural-frequency trees: a reference population split first by the
// hypothesis and then by the evidence.
//
//                  population
//          hypothesis      complement
//     hits  quiet_hyp   false_alarms  quiet_comp
//
// Leaves are always listed in that branch order.

#include "bayesproof/error.hpp"
#include "bayesproof/posterior.hpp"
#include "bayesproof/rational.hpp"
#include "bayesproof/scenario.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bayesproof {

enum class RoundingPolicy {
    /// Integer counts; each parent's count is split by largest remainders so
    /// that children always sum to their parent.
    LargestRemainder,
    /// Keep the expected counts as exact rationals.
    ExactRational,
};

inline const char* to_string(RoundingPolicy p) noexcept {
    return p == RoundingPolicy::LargestRemainder ? "largest-remainder" : "exact-rational";
}

inline std::optional<RoundingPolicy> parse_rounding_policy(std::string_view name) {
    if (name == "largest-remainder") return RoundingPolicy::LargestRemainder;
    if (name == "exact-rational") return RoundingPolicy::ExactRational;
    return std::nullopt;
}

inline constexpr std::int64_t default_population = 100;

struct FrequencyTree {
    std::int64_t population = default_population;
    Rational hypothesis_count;
    Rational complement_count;
    Rational hits;
    Rational quiet_hypothesis;
    Rational false_alarms;
    Rational quiet_complement;
    /// True when every expected count was already an integer.
    bool counts_exact = true;
    /// Displayed leaf count minus expected leaf count, in branch order.
    /// All zero unless rounding moved something.
    std::array<Rational, 4> rounding_residuals{};
    std::string hypothesis_label = "runs on Main Street";
    std::string evidence_label = "is blue";

    std::array<Rational, 4> leaves() const {
        return {hits, quiet_hypothesis, false_alarms, quiet_complement};
    }

    friend bool operator==(const FrequencyTree&, const FrequencyTree&) = default;
};

/// Largest-remainder (Hamilton) apportionment of `total` seats among
/// `quotas`, which must sum to `total`. Ties in the fractional remainder go
/// to the earlier quota.
inline std::vector<Integer> apportion(const Integer& total, std::span<const Rational> quotas) {
    std::vector<Integer> seats;
    std::vector<Rational> remainders;
    seats.reserve(quotas.size());
    remainders.reserve(quotas.size());
    Integer assigned = 0;
    for (const Rational& q : quotas) {
        Integer f = floor(q);
        seats.push_back(f);
        remainders.push_back(q - Rational{f});
        assigned += f;
    }
    std::vector<std::size_t> order(quotas.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    Integer leftover = total - assigned;
    for (std::size_t i = 0; leftover > 0 && i < order.size(); ++i, --leftover) seats[order[i]] += 1;
    return seats;
}

namespace detail {

struct ExpectedCounts {
    Rational hypothesis, complement;
    std::array<Rational, 4> leaves;
};

inline ExpectedCounts expected_counts(const Scenario& s, const Rational& population) {
    const Rational& p = s.base_rate.value();
    const Rational& h = s.hit_rate.value();
    const Rational& f = s.false_alarm_rate.value();
    Rational hyp = population * p;
    Rational comp = population * (1 - p);
    return {hyp, comp, {hyp * h, hyp * (1 - h), comp * f, comp * (1 - f)}};
}

} // namespace detail

/// Expected counts of `population` individuals under the scenario. When they
/// are not all integers the rounding policy decides what is stored.
/// Throws RangeError for population < 1.
inline FrequencyTree build_tree(const Scenario& s, std::int64_t population = default_population,
                                RoundingPolicy rounding = RoundingPolicy::LargestRemainder) {
    if (population < 1) throw RangeError("population must be at least 1");
    const Rational n{population};
    detail::ExpectedCounts expected = detail::expected_counts(s, n);

    FrequencyTree tree;
    tree.population = population;
    tree.hypothesis_label = s.hypothesis_label;
    tree.evidence_label = s.evidence_label;
    tree.counts_exact = is_integral(expected.hypothesis) &&
                        std::all_of(expected.leaves.begin(), expected.leaves.end(),
                                    [](const Rational& c) { return is_integral(c); });

    if (tree.counts_exact || rounding == RoundingPolicy::ExactRational) {
        tree.hypothesis_count = expected.hypothesis;
        tree.complement_count = expected.complement;
        tree.hits = expected.leaves[0];
        tree.quiet_hypothesis = expected.leaves[1];
        tree.false_alarms = expected.leaves[2];
        tree.quiet_complement = expected.leaves[3];
        return tree;
    }

    const std::array<Rational, 2> row2{expected.hypothesis, expected.complement};
    std::vector<Integer> parents = apportion(Integer{population}, row2);

    const Rational& h = s.hit_rate.value();
    const Rational& f = s.false_alarm_rate.value();
    const std::array<Rational, 2> left{Rational{parents[0]} * h, Rational{parents[0]} * (1 - h)};
    const std::array<Rational, 2> right{Rational{parents[1]} * f, Rational{parents[1]} * (1 - f)};
    std::vector<Integer> left_leaves = apportion(parents[0], left);
    std::vector<Integer> right_leaves = apportion(parents[1], right);

    tree.hypothesis_count = Rational{parents[0]};
    tree.complement_count = Rational{parents[1]};
    tree.hits = Rational{left_leaves[0]};
    tree.quiet_hypothesis = Rational{left_leaves[1]};
    tree.false_alarms = Rational{right_leaves[0]};
    tree.quiet_complement = Rational{right_leaves[1]};
    const auto leaves = tree.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i)
        tree.rounding_residuals[i] = leaves[i] - expected.leaves[i];
    return tree;
}

/// The frequency shortcut: hits / (hits + false alarms).
inline Probability posterior_from_tree(const FrequencyTree& tree) {
    Rational flagged = tree.hits + tree.false_alarms;
    if (flagged == 0)
        throw DegenerateEvidence("the tree has no hits and no false alarms; the posterior is undefined");
    return Probability{tree.hits / flagged};
}

/// Smallest population, at most `cap`, whose tree has all-integer counts.
/// That population is the lcm of the denominators of the six per-capita
/// masses, so no search is needed.
inline std::optional<std::int64_t> minimal_integral_population(const Scenario& s, std::int64_t cap) {
    if (cap < 1) throw RangeError("population cap must be at least 1");
    detail::ExpectedCounts per_capita = detail::expected_counts(s, Rational{1});
    Integer lcm = denominator(per_capita.hypothesis);
    auto fold = [&lcm](const Rational& r) {
        const Integer& d = denominator(r);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    };
    fold(per_capita.complement);
    for (const Rational& leaf : per_capita.leaves) fold(leaf);
    if (lcm > cap) return std::nullopt;
    return lcm.convert_to<std::int64_t>();
}

} // namespace bayesproof
