#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lepra/scenarios.hpp"
#include "lepra/solver.hpp"

namespace lepra {
// Independent verification tools. These deliberately reuse nothing from
// the solver beyond the model right-hand sides: cost values come from
// integrate_forward + total_cost only.
namespace oracle {

/// Central-difference directional derivative of the total cost for a
/// constant per-window perturbation: (J(D + e*dir) - J(D - e*dir)) / 2e.
double fd_cost_gradient(const ScenarioConfig& scenario,
                        std::span<const double> window_direction, double eps);

/// Adjoint-based counterpart for the same directional derivative, using
/// the same trapezoid weights as the cost quadrature.
double adjoint_cost_gradient(const ScenarioConfig& scenario,
                             std::span<const double> window_direction);

struct PkPoint {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Closed-form two-compartment solution under a constant total dose rate
/// u and zero initial concentrations. Requires k12 + k1 != k2.
PkPoint analytic_pk(double source, const Params& p, double t);

/// Cost of the scenario with every control forced to zero.
double uncontrolled_cost(const ScenarioConfig& scenario);

struct VerifyOutcome {
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

/// Runs the oracle suite (analytic PK agreement, integrator order,
/// finite-difference vs adjoint gradients in both modes, epsilon sweep)
/// and prints one pass/fail line per check.
VerifyOutcome verify_suite(std::ostream& out);

}  // namespace oracle
}  // namespace lepra
