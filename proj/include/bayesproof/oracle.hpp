#pragma once

// Two independent checks on compute_posterior: literal enumeration of a
// concrete population, and seeded Monte Carlo sampling.

#include "bayesproof/error.hpp"
#include "bayesproof/probability.hpp"
#include "bayesproof/rational.hpp"
#include "bayesproof/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bayesproof {

struct Individual {
    bool hypothesis;
    bool evidence;
};

/// The explicit population behind an exact frequency tree, in branch order.
/// Throws NonIntegralCounts when `population` does not split into whole
/// individuals, RangeError when it is below 1.
inline std::vector<Individual> enumerate_population(const Scenario& s, std::int64_t population) {
    if (population < 1) throw RangeError("population must be at least 1");
    const Rational n{population};
    const Rational& p = s.base_rate.value();
    const std::array<std::pair<Rational, Individual>, 4> groups{{
        {n * p * s.hit_rate.value(), {true, true}},
        {n * p * (1 - s.hit_rate.value()), {true, false}},
        {n * (1 - p) * s.false_alarm_rate.value(), {false, true}},
        {n * (1 - p) * (1 - s.false_alarm_rate.value()), {false, false}},
    }};
    std::vector<Individual> people;
    people.reserve(static_cast<std::size_t>(population));
    for (const auto& [count, kind] : groups) {
        if (!is_integral(count))
            throw NonIntegralCounts("population " + std::to_string(population) +
                                    " does not split into whole individuals");
        people.insert(people.end(), count.convert_to<std::size_t>(), kind);
    }
    return people;
}

/// Fraction of the individuals showing the evidence for whom the hypothesis
/// also holds.
inline Probability enumerate_posterior(const Scenario& s, std::int64_t population) {
    std::int64_t flagged = 0;
    std::int64_t flagged_and_true = 0;
    for (const Individual& person : enumerate_population(s, population)) {
        if (!person.evidence) continue;
        ++flagged;
        if (person.hypothesis) ++flagged_and_true;
    }
    if (flagged == 0) throw DegenerateEvidence("no individual in the population shows the evidence");
    return Probability{Rational{flagged_and_true, flagged}};
}

struct SimResult {
    Probability estimate;
    double standard_error = 0.0;
    std::uint64_t samples_total = 0;
    std::uint64_t samples_conditioned = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw. Spelled
/// out because std::uniform_real_distribution differs between standard
/// libraries, while std::mt19937_64 itself is fully specified.
inline double unit_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Draws `samples` individuals (hypothesis first, then evidence given the
/// hypothesis), keeps those showing the evidence and reports the fraction for
/// whom the hypothesis holds, with its binomial standard error.
/// Reproducible from `seed` on every platform.
inline SimResult monte_carlo_posterior(const Scenario& s, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw RangeError("at least one sample is required");
    const double base = s.base_rate.to_double();
    const double hit = s.hit_rate.to_double();
    const double false_alarm = s.false_alarm_rate.to_double();

    std::mt19937_64 engine{seed};
    std::uint64_t conditioned = 0;
    std::uint64_t conditioned_true = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const bool hypothesis = unit_uniform(engine) < base;
        const bool evidence = unit_uniform(engine) < (hypothesis ? hit : false_alarm);
        if (evidence) {
            ++conditioned;
            if (hypothesis) ++conditioned_true;
        }
    }
    if (conditioned == 0)
        throw NoConditionedSamples("none of the " + std::to_string(samples) + " draws showed the evidence");

    const double n = static_cast<double>(conditioned);
    const double estimate = static_cast<double>(conditioned_true) / n;
    SimResult result;
    result.estimate = Probability{Rational{Integer{conditioned_true}, Integer{conditioned}}};
    result.standard_error = std::sqrt(estimate * (1.0 - estimate) / n);
    result.samples_total = samples;
    result.samples_conditioned = conditioned;
    result.seed = seed;
    return result;
}

} // namespace bayesproof
