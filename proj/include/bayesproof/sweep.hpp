#pragma once

// One-parameter sensitivity sweeps: hold two rates fixed, vary the third
// over a grid and record the posterior and the verdict at each point.

#include "bayesproof/error.hpp"
#include "bayesproof/posterior.hpp"
#include "bayesproof/probability.hpp"
#include "bayesproof/scenario.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace bayesproof {

struct SweepRow {
    Probability value;
    /// Empty where the substituted scenario has impossible evidence.
    std::optional<Probability> posterior;
    std::optional<Outcome> verdict;

    bool degenerate() const { return !posterior.has_value(); }
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepTable {
    Parameter swept_parameter;
    Probability threshold;
    std::vector<SweepRow> rows;
};

/// `steps` evenly spaced exact values from `from` to `to` inclusive.
/// A single step yields just `from`.
inline std::vector<Probability> linear_grid(const Probability& from, const Probability& to, std::size_t steps) {
    if (steps == 0) throw EmptyGrid("a sweep needs at least one step");
    if (steps == 1) return {from};
    if (!(from < to)) throw RangeError("sweep range must be increasing when more than one step is requested");
    std::vector<Probability> grid;
    grid.reserve(steps);
    const Rational span = to.value() - from.value();
    const Rational last{static_cast<long long>(steps - 1)};
    for (std::size_t i = 0; i < steps; ++i)
        grid.emplace_back(from.value() + span * Rational{static_cast<long long>(i)} / last);
    return grid;
}

/// Evaluates the scenario at each grid value of `parameter`. Degenerate grid
/// points are recorded, not raised. Throws EmptyGrid for an empty grid and
/// RangeError when the grid is not strictly increasing.
inline SweepTable sweep(const Scenario& scenario, Parameter parameter, std::span<const Probability> grid,
                        const Probability& threshold = preponderance_threshold()) {
    if (grid.empty()) throw EmptyGrid("a sweep needs at least one grid value");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i])) throw RangeError("sweep grid must be strictly increasing");

    SweepTable table{parameter, threshold, {}};
    table.rows.reserve(grid.size());
    for (const Probability& value : grid) {
        SweepRow row{value, std::nullopt, std::nullopt};
        try {
            PosteriorBreakdown b = compute_posterior(with(scenario, parameter, value));
            row.verdict = decide(b, threshold).outcome;
            row.posterior = std::move(b.posterior);
        } catch (const DegenerateEvidence&) {
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline constexpr int sweep_csv_significant_digits = 6;

/// CSV with header `param,value,posterior,verdict`. Values are written
/// exactly; posteriors with six significant digits; degenerate rows carry
/// `DegenerateEvidence` and `None`.
inline std::string to_csv(const SweepTable& table) {
    std::ostringstream out;
    out << "param,value,posterior,verdict\n";
    for (const SweepRow& row : table.rows) {
        out << to_string(table.swept_parameter) << ',' << to_exact_string(row.value) << ',';
        if (row.posterior)
            out << to_significant_string(row.posterior->value(), sweep_csv_significant_digits) << ','
                << to_string(*row.verdict);
        else
            out << "DegenerateEvidence,None";
        out << '\n';
    }
    return out.str();
}

} // namespace bayesproof
