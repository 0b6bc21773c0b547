#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"

namespace semwave {

enum class Boundary { periodic, reflecting };

// Uniform 1-D grid over the semantic coordinate. Points are
// x_i = x_min + i*dx with dx = (x_max - x_min)/n_points. Periodic grids
// identify x_max with x_min, so x_max itself is never stored; reflecting
// grids impose zero values at the virtual points x_min - dx and x_max.
struct SpatialGrid {
    int n_points = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    Boundary boundary = Boundary::periodic;

    double dx() const { return (x_max - x_min) / static_cast<double>(n_points); }
    double length() const { return x_max - x_min; }
    double x(int i) const { return x_min + static_cast<double>(i) * dx(); }

    std::vector<double> points() const {
        std::vector<double> xs(static_cast<size_t>(n_points));
        for (int i = 0; i < n_points; ++i) xs[static_cast<size_t>(i)] = x(i);
        return xs;
    }

    bool operator==(const SpatialGrid& other) const {
        return n_points == other.n_points && x_min == other.x_min &&
               x_max == other.x_max && boundary == other.boundary;
    }
    bool operator!=(const SpatialGrid& other) const { return !(*this == other); }
};

inline SpatialGrid make_grid(int n_points, double x_min, double x_max, Boundary boundary) {
    if (n_points < 8)
        throw_error(ErrorCode::invalid_parameter,
                    "grid needs at least 8 points, got " + std::to_string(n_points));
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
        throw_error(ErrorCode::invalid_parameter, "grid requires finite x_max > x_min");
    return SpatialGrid{n_points, x_min, x_max, boundary};
}

inline void require_same_grid(const SpatialGrid& a, const SpatialGrid& b, const char* what) {
    if (a != b)
        throw_error(ErrorCode::incompatible_grids,
                    std::string(what) + ": operands live on different grids");
}

inline const char* boundary_name(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "reflecting";
}

inline Boundary boundary_from_name(const std::string& name) {
    if (name == "periodic") return Boundary::periodic;
    if (name == "reflecting") return Boundary::reflecting;
    throw_error(ErrorCode::parse_error, "unknown boundary '" + name + "'");
}

} // namespace semwave
