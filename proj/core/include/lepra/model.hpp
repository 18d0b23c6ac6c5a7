#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lepra/controls.hpp"
#include "lepra/params.hpp"
#include "lepra/state.hpp"

namespace lepra {

/// single_window: one dosing burst, toxicity acts through c1(t - tau_d).
/// two_window: a second burst delayed by tau; the susceptible-cell
/// equation carries both c1(t - tau - tau_d) and c1(t - tau_d) toxicity
/// terms and the co-state picks up a factor 2 accordingly.
enum class DoseMode { single_window, two_window };

inline double heaviside(double v) { return v >= 0.0 ? 1.0 : 0.0; }

/// Total dose rate entering the plasma at node index (+half), already
/// divided by V1.  Exact node arithmetic; used by the integrator.
inline double plasma_source_at(const ControlSchedule& sch, const Params& p,
                               int node, bool half)
{
    double sum = 0.0;
    for (std::size_t w = 0; w < sch.windows.size(); ++w) {
        const int local = node - sch.shift_index(w);
        sum += half ? window_value_at_half(sch.windows[w], local)
                    : window_value_at_node(sch.windows[w], local);
    }
    return sum / p.V1;
}

/// Real-time entry point: sum of window doses at (t - shift) over V1.
double plasma_source(double t, const ControlSchedule& sch, const Params& p);

struct DrugDose {
    DrugId drug;
    double dose;  // [mg/day]
};

/// Doses active at node index (+half): one entry per window whose shifted
/// time has begun.
std::vector<DrugDose> doses_at(const ControlSchedule& sch, int node, bool half);
std::vector<DrugDose> doses_at_time(const ControlSchedule& sch, double t);

/// Lagrangian: infected cells + bacterial load + quadratic dose penalty.
inline double running_cost(const StateVec& x, const std::vector<DrugDose>& doses,
                           const CostWeights& w)
{
    double c = x.I + x.B;
    for (const auto& d : doses) c += w.for_drug(d.drug) * d.dose * d.dose;
    return c;
}

/// Delayed plasma concentrations entering the susceptible-cell equation.
struct DelayedPlasma {
    double at_tau_d = 0.0;           // c1(t - tau_d)
    double at_tau_plus_tau_d = 0.0;  // c1(t - tau - tau_d), two-window only
};

namespace detail {

inline double kill_gate(const StateVec& x, const Params& p)
{
    return heaviside(x.c2 - p.C_min);
}

// (c2 - C_min) * H(c2 - C_min): continuous positive part of the excess
// site concentration.
inline double kill_excess(const StateVec& x, const Params& p)
{
    return (x.c2 - p.C_min) * kill_gate(x, p);
}

inline double inhibition_bracket(const StateVec& x, const Params& p)
{
    return p.d_Ta_Ig * x.Ta + p.d_I12_Ig * x.I12 + p.d_I15_Ig * x.I15 +
           p.d_I17_Ig * x.I17;
}

}  // namespace detail

/// Time derivative of the state. `c1_at` must return c1 at any absolute
/// time s <= t, with 0 for s < 0; it is queried at t - tau_d (and at
/// t - tau - tau_d in two-window mode).
template <class C1At>
StateVec state_rhs(double t, const StateVec& x, const ControlSchedule& sch,
                   C1At&& c1_at, const Params& p, DoseMode mode,
                   double source_over_v1)
{
    if (!x.finite()) throw std::invalid_argument("state_rhs: non-finite state");

    const double pos = detail::kill_excess(x, p);
    const double brk = detail::inhibition_bracket(x, p);
    double tox = c1_at(t - p.tau_d);
    if (mode == DoseMode::two_window) tox += c1_at(t - p.tau - p.tau_d);

    StateVec f;
    f.c1 = source_over_v1 - (p.k12 + p.k1) * x.c1;
    f.c2 = p.k12 * (p.V1 / p.V2) * x.c1 - p.k2 * x.c2;
    f.S = p.omega - p.beta * x.S * x.B - p.gamma * x.S - p.mu1 * x.S -
          p.mu_d_sum() * tox * x.S;
    f.I = p.beta * x.S * x.B - p.delta * x.I - p.mu1 * x.I -
          p.eta * p.k_d_sum() * pos * x.I;
    f.B = p.alpha * x.I - p.y * x.B - p.mu2 * x.B - p.k_d_sum() * pos * x.B;
    f.Ig = p.alpha_Ig * x.I - brk * x.I - p.mu_Ig * (x.Ig - p.Q_Ig);
    f.Ta = p.beta_Ta * x.Ig * x.I - p.mu_Ta * (x.Ta - p.Q_Ta);
    f.I10 = p.alpha_I10 * x.I - p.d_Ig_I10 * x.Ig - p.mu_I10 * (x.I10 - p.Q_I10);
    f.I12 = p.beta_I12 * x.Ig * x.I - p.mu_I12 * (x.I12 - p.Q_I12);
    f.I15 = p.beta_I15 * x.Ig * x.I - p.mu_I15 * (x.I15 - p.Q_I15);
    f.I17 = p.beta_I17 * x.Ig * x.I - p.mu_I17 * (x.I17 - p.Q_I17);
    return f;
}

template <class C1At>
StateVec state_rhs(double t, const StateVec& x, const ControlSchedule& sch,
                   C1At&& c1_at, const Params& p, DoseMode mode)
{
    return state_rhs(t, x, sch, c1_at, p, mode, plasma_source(t, sch, p));
}

/// Co-state time derivative: the negative state gradient of the
/// Hamiltonian.  `delayed` carries the stored-forward c1 values feeding
/// the susceptible-cell equation's coefficient in dl3/dt.
AdjointVec adjoint_rhs(const AdjointVec& lam, const StateVec& x,
                       const DelayedPlasma& delayed, const Params& p,
                       DoseMode mode);

/// Running cost plus adjoint-weighted dynamics. Delayed c1 lookups are
/// resolved to the current x.c1, the convention under which adjoint_rhs
/// is exactly -dH/dx.
double hamiltonian(double t, const StateVec& x, const AdjointVec& lam,
                   const ControlSchedule& sch, const CostWeights& w,
                   const Params& p, DoseMode mode);

/// Cytokine fixed point of the infection-free system (I = 0).
struct CytokineLevels {
    double Ig = 0.0, Ta = 0.0, I10 = 0.0, I12 = 0.0, I15 = 0.0, I17 = 0.0;
};

CytokineLevels cytokine_equilibrium(const Params& p);

}  // namespace lepra
