#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lepra/grid.hpp"

namespace lepra {

enum class DrugId { rifampin = 0, dapsone = 1, clofazimine = 2 };

inline constexpr DrugId kAllDrugs[] = {DrugId::rifampin, DrugId::dapsone,
                                       DrugId::clofazimine};

std::string_view to_string(DrugId d);
DrugId drug_from_string(std::string_view s);

/// Quadratic penalty weights P, Q, R on rifampin, dapsone, clofazimine.
struct CostWeights {
    double P = 1.5;
    double Q = 1.5;
    double R = 1.5;

    double for_drug(DrugId d) const
    {
        switch (d) {
            case DrugId::rifampin: return P;
            case DrugId::dapsone: return Q;
            case DrugId::clofazimine: return R;
        }
        return P;
    }

    void validate() const
    {
        if (!(P > 0.0) || !(Q > 0.0) || !(R > 0.0))
            throw std::invalid_argument("cost weights must be positive");
    }
};

/// One drug's dose-rate function over the grid. The contribution enters
/// the plasma at t = shift + (window-local time); a window with shift > 0
/// contributes nothing before t = shift.
struct DoseWindow {
    DrugId drug = DrugId::rifampin;
    int window_id = 1;             // 1 = undelayed, 2 = delayed by tau
    double shift = 0.0;            // [day], integer multiple of h
    double d_max = 60.0;           // admissible upper bound [mg/day]
    std::vector<double> values;    // dose rate per grid node [mg/day]
};

struct ControlSchedule {
    Grid grid;
    std::vector<DoseWindow> windows;

    void validate() const
    {
        for (const auto& w : windows) {
            if (static_cast<int>(w.values.size()) != grid.nodes)
                throw std::invalid_argument("dose window values must cover every grid node");
            grid.index_of(w.shift, "window shift");
            if (!(w.d_max >= 0.0))
                throw std::invalid_argument("d_max must be non-negative");
            for (double v : w.values)
                if (!(v >= 0.0) || v > w.d_max)
                    throw std::invalid_argument("dose values must lie in [0, d_max]");
        }
    }

    int shift_index(std::size_t w) const
    {
        return grid.index_of(windows[w].shift, "window shift");
    }
};

/// Window value at integer node index in window-local time; 0 outside.
inline double window_value_at_node(const DoseWindow& w, int local)
{
    if (local < 0 || local >= static_cast<int>(w.values.size())) return 0.0;
    return w.values[static_cast<std::size_t>(local)];
}

/// Window value at local + 1/2; the dose is 0 strictly before local time 0.
inline double window_value_at_half(const DoseWindow& w, int local)
{
    if (local < 0) return 0.0;
    return 0.5 * (window_value_at_node(w, local) + window_value_at_node(w, local + 1));
}

/// Window value at arbitrary window-local time, linear between nodes.
double window_value_at(const DoseWindow& w, double local_t, const Grid& g);

}  // namespace lepra
