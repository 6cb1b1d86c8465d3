#include "bayesproof/frequency_tree.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace bayesproof {
namespace {

using testing::Generator;
using testing::worked_examples;
using testing::scenario_of;

std::array<Rational, 4> leaves_of(std::array<int, 4> counts) {
    return {Rational{counts[0]}, Rational{counts[1]}, Rational{counts[2]}, Rational{counts[3]}};
}

void expect_conserved(const FrequencyTree& t) {
    EXPECT_EQ(t.hypothesis_count + t.complement_count, Rational{t.population});
    EXPECT_EQ(t.hits + t.quiet_hypothesis, t.hypothesis_count);
    EXPECT_EQ(t.false_alarms + t.quiet_complement, t.complement_count);
    for (const Rational& c : t.leaves()) EXPECT_GE(c, 0);
}

TEST(BuildTree, ExampleOneRows) {
    const FrequencyTree t = build_tree(make_scenario("0.4", "0.8", "0.1"), 100);
    EXPECT_EQ(t.population, 100);
    EXPECT_EQ(t.hypothesis_count, 40);
    EXPECT_EQ(t.complement_count, 60);
    EXPECT_EQ(t.leaves(), leaves_of({32, 8, 6, 54}));
    EXPECT_TRUE(t.counts_exact);
    for (const Rational& r : t.rounding_residuals) EXPECT_EQ(r, 0);
}

TEST(BuildTree, WorkedExampleLeavesAtOneHundred) {
    for (const auto& e : worked_examples()) {
        SCOPED_TRACE(e.name);
        const FrequencyTree t = build_tree(scenario_of(e));
        EXPECT_EQ(t.population, default_population);
        EXPECT_EQ(t.leaves(), leaves_of(e.leaves));
        EXPECT_TRUE(t.counts_exact);
        expect_conserved(t);
    }
}

TEST(BuildTree, PerfectClassifierAtMinimumPopulation) {
    const FrequencyTree t = build_tree(make_scenario("0.5", "1", "0"), 2);
    EXPECT_EQ(t.hypothesis_count, 1);
    EXPECT_EQ(t.complement_count, 1);
    EXPECT_EQ(t.leaves(), leaves_of({1, 0, 0, 1}));
    EXPECT_TRUE(t.counts_exact);
}

TEST(BuildTree, CarriesLabels) {
    Scenario s = make_scenario("0.4", "0.8", "0.1");
    s.hypothesis_label = "guilty";
    s.evidence_label = "matches";
    const FrequencyTree t = build_tree(s);
    EXPECT_EQ(t.hypothesis_label, "guilty");
    EXPECT_EQ(t.evidence_label, "matches");
}

TEST(BuildTree, RejectsEmptyPopulation) {
    EXPECT_THROW(build_tree(make_scenario("0.4", "0.8", "0.1"), 0), RangeError);
    EXPECT_THROW(build_tree(make_scenario("0.4", "0.8", "0.1"), -5), RangeError);
}

TEST(BuildTree, LargestRemainderWithinEachParent) {
    // N = 10, p = 1/3: row 2 quotas 10/3, 20/3 -> 3, 7.
    // left 3 * 1/2 = 1.5 | 1.5 -> tie to the first leaf: 2, 1.
    // right 7 * 3/10 = 2.1 | 4.9 -> 2, 5.
    const FrequencyTree t = build_tree(make_scenario("1/3", "0.5", "0.3"), 10);
    EXPECT_FALSE(t.counts_exact);
    EXPECT_EQ(t.hypothesis_count, 3);
    EXPECT_EQ(t.complement_count, 7);
    EXPECT_EQ(t.leaves(), leaves_of({2, 1, 2, 5}));
    const std::array<Rational, 4> residuals{Rational(1, 3), Rational(-2, 3), Rational(0), Rational(1, 3)};
    EXPECT_EQ(t.rounding_residuals, residuals);
    expect_conserved(t);
}

TEST(BuildTree, ExactRationalPolicyKeepsFractions) {
    const FrequencyTree t = build_tree(make_scenario("1/3", "0.5", "0.3"), 10, RoundingPolicy::ExactRational);
    EXPECT_FALSE(t.counts_exact);
    EXPECT_EQ(t.hypothesis_count, Rational(10, 3));
    EXPECT_EQ(t.leaves(), (std::array<Rational, 4>{Rational(5, 3), Rational(5, 3), Rational(2), Rational(14, 3)}));
    for (const Rational& r : t.rounding_residuals) EXPECT_EQ(r, 0);
    expect_conserved(t);
}

TEST(BuildTree, RoundingPolicyNames) {
    for (RoundingPolicy p : {RoundingPolicy::LargestRemainder, RoundingPolicy::ExactRational})
        EXPECT_EQ(parse_rounding_policy(to_string(p)), p);
    EXPECT_FALSE(parse_rounding_policy("nearest").has_value());
}

TEST(Apportion, HamiltonMethod) {
    const std::vector<Rational> quotas{Rational(5, 2), Rational(5, 2), Rational(5)};
    EXPECT_EQ(apportion(Integer{10}, quotas), (std::vector<Integer>{3, 2, 5}));
    const std::vector<Rational> uneven{Rational(14, 10), Rational(36, 10), Rational(5)};
    EXPECT_EQ(apportion(Integer{10}, uneven), (std::vector<Integer>{1, 4, 5}));
}

TEST(PosteriorFromTree, HitsOverHitsPlusFalseAlarms) {
    EXPECT_EQ(posterior_from_tree(build_tree(make_scenario("0.4", "0.8", "0.1"))).value(), Rational(32, 38));
    const FrequencyTree ex5 = build_tree(make_scenario("0.4", "0.95", "0.8"));
    ASSERT_EQ(ex5.hits, 38);
    ASSERT_EQ(ex5.false_alarms, 48);
    EXPECT_EQ(posterior_from_tree(ex5).value(), Rational(38, 86));
}

TEST(PosteriorFromTree, SymmetricEvidenceGivesOneHalf) {
    FrequencyTree t;
    t.hits = 7;
    t.false_alarms = 7;
    EXPECT_EQ(posterior_from_tree(t), Probability(1, 2));
}

TEST(PosteriorFromTree, NoFlaggedIndividualsIsDegenerate) {
    EXPECT_THROW(posterior_from_tree(build_tree(make_scenario("0.4", "0", "0"))), DegenerateEvidence);
}

// Independent oracle: scan N = 1..cap for integrality of all six counts.
std::optional<std::int64_t> brute_force_minimal_population(const Scenario& s, std::int64_t cap) {
    const Rational& p = s.base_rate.value();
    const Rational& h = s.hit_rate.value();
    const Rational& f = s.false_alarm_rate.value();
    for (std::int64_t n = 1; n <= cap; ++n) {
        const Rational N{n};
        if (is_integral(N * p) && is_integral(N * (1 - p)) && is_integral(N * p * h) &&
            is_integral(N * p * (1 - h)) && is_integral(N * (1 - p) * f) && is_integral(N * (1 - p) * (1 - f)))
            return n;
    }
    return std::nullopt;
}

TEST(MinimalIntegralPopulation, FrozenOracleValues) {
    // Frozen from brute_force_minimal_population. Example 1 needs 50, not 25:
    // 25 * 0.6 * 0.1 = 1.5 false alarms.
    EXPECT_EQ(minimal_integral_population(make_scenario("0.4", "0.8", "0.1"), 1000), 50);
    EXPECT_EQ(brute_force_minimal_population(make_scenario("0.4", "0.8", "0.1"), 1000), 50);
    EXPECT_EQ(minimal_integral_population(make_scenario("0.4", "0.95", "0.1"), 1000), 50);
    EXPECT_EQ(brute_force_minimal_population(make_scenario("0.4", "0.95", "0.1"), 1000), 50);
    EXPECT_EQ(minimal_integral_population(make_scenario("0.5", "1", "0"), 10), 2);
}

TEST(MinimalIntegralPopulation, NotFoundBelowCap) {
    EXPECT_FALSE(minimal_integral_population(make_scenario("0.4", "0.95", "0.1"), 49).has_value());
    EXPECT_FALSE(minimal_integral_population(make_scenario("1/7", "1/11", "1/13"), 100).has_value());
    EXPECT_THROW(minimal_integral_population(make_scenario("0.4", "0.8", "0.1"), 0), RangeError);
}

TEST(MinimalIntegralPopulation, AgreesWithBruteForceScan) {
    Generator gen{21};
    for (int i = 0; i < 300; ++i) {
        const Scenario s = gen.scenario(gen.integer(1, 12));
        const std::int64_t cap = gen.integer(1, 600);
        ASSERT_EQ(minimal_integral_population(s, cap), brute_force_minimal_population(s, cap));
    }
}

// --- properties -------------------------------------------------------------

TEST(TreeProperties, TreeShortcutEqualsFormulaOnExactTrees) {
    Generator gen{22};
    int checked = 0;
    while (checked < 1000) {
        const Scenario s = gen.scenario(gen.integer(1, 40));
        if (joint_masses(s).evidence_marginal.value() == 0) continue;
        const auto n = minimal_integral_population(s, 1'000'000);
        ASSERT_TRUE(n.has_value());
        const FrequencyTree t = build_tree(s, *n * gen.integer(1, 5));
        ASSERT_TRUE(t.counts_exact);
        ASSERT_EQ(posterior_from_tree(t), compute_posterior(s).posterior);
        ++checked;
    }
}

TEST(TreeProperties, RoundingNeverBreaksConservation) {
    Generator gen{23};
    int checked = 0;
    while (checked < 1000) {
        const Scenario s = gen.scenario(gen.integer(2, 997));
        const std::int64_t population = gen.integer(1, 250);
        const FrequencyTree t = build_tree(s, population);
        if (t.counts_exact) continue;
        expect_conserved(t);
        for (const Rational& c : t.leaves()) ASSERT_TRUE(is_integral(c));
        for (const Rational& r : t.rounding_residuals) ASSERT_LT(abs(r), 2);
        ++checked;
    }
}

TEST(TreeProperties, ScalingMultipliesCountsAndKeepsPosterior) {
    Generator gen{24};
    for (int i = 0; i < 300; ++i) {
        const Scenario s = gen.scenario(gen.integer(1, 20));
        if (joint_masses(s).evidence_marginal.value() == 0) continue;
        const std::int64_t n = *minimal_integral_population(s, 1'000'000);
        const std::int64_t k = gen.integer(2, 9);
        const FrequencyTree base = build_tree(s, n);
        const FrequencyTree scaled = build_tree(s, n * k);
        for (std::size_t j = 0; j < 4; ++j) ASSERT_EQ(scaled.leaves()[j], base.leaves()[j] * k);
        ASSERT_EQ(scaled.hypothesis_count, base.hypothesis_count * k);
        ASSERT_EQ(posterior_from_tree(scaled), posterior_from_tree(base));
    }
}

} // namespace
} // namespace bayesproof
