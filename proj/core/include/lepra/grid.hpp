#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lepra {

/// Uniform time grid on [0, T]. All internal time bookkeeping is done in
/// node indices; t = k*h is reconstructed only for output and for the
/// public real-time evaluation entry points.
struct Grid {
    double horizon = 30.0;  // T [day]
    double step = 0.1;      // h [day]
    int nodes = 301;        // T/h + 1

    static Grid make(double T, double h)
    {
        if (!(h > 0.0) || !(T > 0.0))
            throw std::invalid_argument("grid: T and h must be positive");
        const double q = T / h;
        const double r = std::round(q);
        if (std::abs(q - r) > 1e-9 * std::max(1.0, q))
            throw std::invalid_argument("grid: T/h must be an integer (T=" +
                                        std::to_string(T) + ", h=" + std::to_string(h) + ")");
        return Grid{T, h, static_cast<int>(r) + 1};
    }

    double time_at(int k) const { return static_cast<double>(k) * step; }

    /// Index of a duration that must land exactly on the grid.
    int index_of(double duration, const char* what) const
    {
        const double q = duration / step;
        const double r = std::round(q);
        if (std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q)))
            throw std::invalid_argument(std::string(what) +
                                        " must be an integer multiple of the step h");
        return static_cast<int>(r);
    }

    bool operator==(const Grid&) const = default;
};

}  // namespace lepra
