#pragma once

#include <string>
#include <vector>

#include "lepra/solver.hpp"

namespace lepra {

struct ComparisonRow {
    std::string compartment;
    double baseline_final = 0.0;
    std::vector<double> scenario_final;
    std::vector<int> sign;  // -1 below baseline, 0 equal, +1 above
};

struct ComparisonReport {
    std::string baseline_name;
    std::vector<std::string> scenario_names;
    std::vector<SolveReport> reports;  // baseline first, then scenarios
    std::vector<ComparisonRow> rows;
};

/// Solves every scenario (the no-drug member is the baseline; one is
/// synthesized from the first entry if absent) and tabulates day-T
/// compartment values against it. Scenarios must share grid and x0.
/// Member solves run concurrently.
ComparisonReport run_comparison(const std::vector<ScenarioConfig>& scenarios,
                                const FbsmSettings& settings);

std::string comparison_to_json(const ComparisonReport& report);

}  // namespace lepra
