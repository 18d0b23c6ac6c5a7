#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lepra/integrate.hpp"
#include "lepra/scenarios.hpp"

namespace lepra {

struct FbsmSettings {
    int max_iters = 500;      // iteration cap
    double tol_rel = 1e-3;    // convergence tolerance on controls and cost
    double theta_max = 1.0;   // upper end of the line-search interval
    double ls_tol = 1e-4;     // line-search interval width
    int ls_max_evals = 80;    // line-search evaluation cap

    void validate() const;
};

/// Gradient arrays shaped like the schedule's windows: for window w with
/// shift s, g(t) = 2*w_drug*D(t) + lam1(t + s)/V1, and 0 where t + s
/// falls beyond the horizon (the dose never enters within [0, T]).
std::vector<std::vector<double>> control_gradient(const AdjointTrajectory& adjoint,
                                                  const ControlSchedule& controls,
                                                  const CostWeights& weights,
                                                  const Params& p);

struct LineSearchResult {
    double theta = 0.0;
    double objective = 0.0;
    int evaluations = 0;
    bool hit_cap = false;
};

/// Golden-section search on [0, theta_max] down to interval width ls_tol.
/// Returns the best evaluated point including theta = 0, so the result
/// never exceeds evaluate(0).
LineSearchResult line_search_theta(const std::function<double(double)>& evaluate,
                                   const FbsmSettings& settings);

/// Pointwise D <- min(d_max, max(0, D - theta*g)).
ControlSchedule update_and_clamp(const ControlSchedule& controls,
                                 const std::vector<std::vector<double>>& gradient,
                                 double theta);

struct ConvergenceCheck {
    bool converged = false;
    double max_rel_change = 0.0;
    double cost_change = 0.0;
};

/// Converged iff the max-norm relative control change and the cost change
/// are both within tol_rel (<= comparisons).
ConvergenceCheck check_convergence(const ControlSchedule& prev,
                                   const ControlSchedule& next, double cost_prev,
                                   double cost_next, const FbsmSettings& settings);

struct DosageSummaryEntry {
    DrugId drug = DrugId::rifampin;
    int window_id = 1;
    double shift = 0.0;
    double average_dose = 0.0;  // time average over the window's active span
};

struct SolveReport {
    std::string scenario_name;
    bool converged = false;
    int iterations = 0;
    std::vector<double> cost_history;  // J per accepted iteration, [0] = initial
    ControlSchedule controls;
    Trajectory state_trajectory;
    AdjointTrajectory adjoint_trajectory;
    std::vector<DosageSummaryEntry> dosage_summary;
    CompartmentSummary compartment_summary;
};

/// Forward-backward sweep: integrate forward, integrate the co-state
/// backward, line-search the gradient step, project onto the admissible
/// box, repeat until the convergence check passes. An update is accepted
/// only if the cost does not increase; otherwise theta is halved up to 10
/// times before giving up with converged = false.
SolveReport fbsm_solve(const ScenarioConfig& scenario, const FbsmSettings& settings);

/// report.json payload (field names as in SolveReport).
std::string solve_report_to_json(const SolveReport& report);

/// Two-column CSV: iteration, J.
void write_cost_history_csv(std::ostream& out, const std::vector<double>& history);

}  // namespace lepra
