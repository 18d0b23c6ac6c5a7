#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>

namespace lepra {

inline constexpr std::size_t kCompartments = 11;

// c1, c2, S, I, B, Ig, Ta, I10, I12, I15, I17
inline constexpr std::array<std::string_view, kCompartments> kCompartmentNames = {
    "c1", "c2", "S", "I", "B", "Ig", "Ta", "I10", "I12", "I15", "I17"};

/// State of the 11-compartment system at one instant: plasma and
/// effect-site drug concentrations, susceptible/infected Schwann cells,
/// bacterial load, and six cytokine levels.
struct StateVec {
    double c1 = 0.0;   // plasma drug concentration [mg/L]
    double c2 = 0.0;   // effect-site drug concentration [mg/L]
    double S = 0.0;    // susceptible Schwann cells
    double I = 0.0;    // infected Schwann cells
    double B = 0.0;    // bacterial load
    double Ig = 0.0;   // IFN-gamma [pg/mL]
    double Ta = 0.0;   // TNF-alpha [pg/mL]
    double I10 = 0.0;  // IL-10 [pg/mL]
    double I12 = 0.0;  // IL-12 [pg/mL]
    double I15 = 0.0;  // IL-15 [pg/mL]
    double I17 = 0.0;  // IL-17 [pg/mL]

    std::array<double, kCompartments> arr() const
    {
        return {c1, c2, S, I, B, Ig, Ta, I10, I12, I15, I17};
    }

    static StateVec from(const std::array<double, kCompartments>& a)
    {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9], a[10]};
    }

    bool finite() const
    {
        for (double v : arr())
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Co-state multipliers, indexed to match StateVec order.
struct AdjointVec {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0, l5 = 0.0, l6 = 0.0;
    double l7 = 0.0, l8 = 0.0, l9 = 0.0, l10 = 0.0, l11 = 0.0;

    std::array<double, kCompartments> arr() const
    {
        return {l1, l2, l3, l4, l5, l6, l7, l8, l9, l10, l11};
    }

    static AdjointVec from(const std::array<double, kCompartments>& a)
    {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9], a[10]};
    }

    bool finite() const
    {
        for (double v : arr())
            if (!std::isfinite(v)) return false;
        return true;
    }
};

}  // namespace lepra
