#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "lepra/grid.hpp"
#include "lepra/state.hpp"

namespace lepra {

/// Node-sampled solution over a grid; exact node lookup plus linear
/// interpolation at half-steps (all the integrators ever need).
template <class V>
struct Series {
    Grid grid;
    std::vector<V> values;

    const V& at_node(int k) const { return values[static_cast<std::size_t>(k)]; }

    V at_half(int k) const
    {
        const auto a = at_node(k).arr();
        const auto b = at_node(k + 1).arr();
        std::array<double, kCompartments> m;
        for (std::size_t i = 0; i < kCompartments; ++i) m[i] = 0.5 * (a[i] + b[i]);
        return V::from(m);
    }

    /// Linear interpolation at arbitrary t in [0, T].
    V at_time(double t) const
    {
        const double q = t / grid.step;
        int i = static_cast<int>(q);
        if (i >= grid.nodes - 1) return values.back();
        if (i < 0) i = 0;
        const double f = q - i;
        if (f < 1e-12) return at_node(i);
        const auto a = at_node(i).arr();
        const auto b = at_node(i + 1).arr();
        std::array<double, kCompartments> m;
        for (std::size_t j = 0; j < kCompartments; ++j) m[j] = (1.0 - f) * a[j] + f * b[j];
        return V::from(m);
    }
};

using Trajectory = Series<StateVec>;
using AdjointTrajectory = Series<AdjointVec>;

/// CSV with header t,c1,c2,S,I,B,Ig,Ta,I10,I12,I15,I17 and full double
/// precision (17 significant digits).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(std::ostream& out, const AdjointTrajectory& traj);

}  // namespace lepra
