#pragma once

#include <stdexcept>
#include <string>

#include "lepra/model.hpp"
#include "lepra/trajectory.hpp"

namespace lepra {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Classic fixed-step RK4 over the schedule's grid. Delayed c1 values are
/// read from already-computed nodes (linear interpolation at the two
/// half-step stage times), 0 before t = 0. Throws NumericalError with the
/// step index if the state leaves the finite range, std::invalid_argument
/// on delay/step misalignment.
Trajectory integrate_forward(const StateVec& x0, const ControlSchedule& sch,
                             const Params& p, DoseMode mode);

/// Backward RK4 sweep of the co-state system on the same grid.
/// lam(T) is stored as literal zeros; forward states at stage times are
/// linearly interpolated from `forward`.
AdjointTrajectory integrate_adjoint(const Trajectory& forward,
                                    const ControlSchedule& sch, const Params& p,
                                    DoseMode mode);

/// Composite trapezoidal quadrature of the running cost over [0, T].
double total_cost(const Trajectory& forward, const ControlSchedule& sch,
                  const CostWeights& w);

}  // namespace lepra
