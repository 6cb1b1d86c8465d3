#pragma once

#include "bayesproof/error.hpp"
#include "bayesproof/probability.hpp"
#include "bayesproof/scenario.hpp"

namespace bayesproof {

/// Joint masses and the conditional probability of the hypothesis given the
/// evidence. Only produced when the evidence has positive probability.
struct PosteriorBreakdown {
    Probability joint_hit;          // p(E and H)
    Probability joint_false_alarm;  // p(E and not H)
    Probability evidence_marginal;  // p(E)
    Probability posterior;          // p(H | E)

    friend bool operator==(const PosteriorBreakdown&, const PosteriorBreakdown&) = default;
};

/// Joint masses only; never throws. Useful when the evidence may be
/// impossible and the caller wants to inspect why.
struct JointMasses {
    Probability joint_hit;
    Probability joint_false_alarm;
    Probability evidence_marginal;
};

inline JointMasses joint_masses(const Scenario& s) {
    Rational hit = s.base_rate.value() * s.hit_rate.value();
    Rational false_alarm = (1 - s.base_rate.value()) * s.false_alarm_rate.value();
    Rational marginal = hit + false_alarm;
    return {Probability{std::move(hit)}, Probability{std::move(false_alarm)},
            Probability{std::move(marginal)}};
}

/// Bayes' rule in exact arithmetic. Throws DegenerateEvidence when p(E) = 0.
inline PosteriorBreakdown compute_posterior(const Scenario& s) {
    JointMasses m = joint_masses(s);
    if (m.evidence_marginal.value() == 0)
        throw DegenerateEvidence("the evidence has probability zero; the posterior is undefined");
    Probability posterior{m.joint_hit.value() / m.evidence_marginal.value()};
    return {std::move(m.joint_hit), std::move(m.joint_false_alarm), std::move(m.evidence_marginal),
            std::move(posterior)};
}

enum class Outcome { ForMovingParty, ForDefendant };

inline const char* to_string(Outcome o) noexcept {
    return o == Outcome::ForMovingParty ? "ForMovingParty" : "ForDefendant";
}

struct Verdict {
    Outcome outcome;
    Probability threshold;
    Probability posterior;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The civil "more likely than not" standard.
inline Probability preponderance_threshold() {
    return Probability{1, 2};
}

/// The moving party wins only when the posterior strictly exceeds the
/// threshold; a tie goes to the defendant.
inline Verdict decide(const PosteriorBreakdown& b, const Probability& threshold = preponderance_threshold()) {
    Outcome outcome = b.posterior > threshold ? Outcome::ForMovingParty : Outcome::ForDefendant;
    return {outcome, threshold, b.posterior};
}

enum class VerdictError { FalseAlarmVerdict, MissVerdict };

inline const char* to_string(VerdictError e) noexcept {
    return e == VerdictError::FalseAlarmVerdict ? "FalseAlarmVerdict" : "MissVerdict";
}

struct ErrorProfile {
    Probability wrong_verdict_probability;
    VerdictError error_kind;

    friend bool operator==(const ErrorProfile&, const ErrorProfile&) = default;
};

/// Probability that the threshold verdict is wrong given everything the
/// evidence says. A verdict for the moving party is wrong with probability
/// 1 - posterior (a false alarm); a verdict for the defendant is wrong with
/// probability posterior (a miss).
inline ErrorProfile verdict_error_profile(const PosteriorBreakdown& b,
                                          const Probability& threshold = preponderance_threshold()) {
    if (decide(b, threshold).outcome == Outcome::ForMovingParty)
        return {b.posterior.complement(), VerdictError::FalseAlarmVerdict};
    return {b.posterior, VerdictError::MissVerdict};
}

} // namespace bayesproof
