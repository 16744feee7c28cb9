#pragma once

#include <string>
#include <vector>

#include "wavespin/errors.hpp"

namespace wavespin {

struct Point {
    double x = 0.0; // [m]
    double y = 0.0; // [m]
};

// Hard-wall rectangular well, open interior (−Lx, Lx) × (−Ly, Ly).
// Lx and Ly are half-widths.
struct WellGeometry {
    double Lx = 0.0; // [m]
    double Ly = 0.0; // [m]

    void validate() const {
        if (!(Lx > 0.0)) throw validation_error("Lx", "well half-width must be > 0");
        if (!(Ly > 0.0)) throw validation_error("Ly", "well half-width must be > 0");
    }

    bool contains_closed(Point p) const {
        return p.x >= -Lx && p.x <= Lx && p.y >= -Ly && p.y <= Ly;
    }
    bool contains_open(Point p) const {
        return p.x > -Lx && p.x < Lx && p.y > -Ly && p.y < Ly;
    }
};

enum class Spin { Up, Down };

inline double spin_sign(Spin s) { return s == Spin::Up ? +1.0 : -1.0; }

struct StateIndex {
    int nx = 1;
    int ny = 1;
    Spin spin = Spin::Up;

    void validate() const {
        if (nx < 1) throw validation_error("nx", "quantum number must be >= 1");
        if (ny < 1) throw validation_error("ny", "quantum number must be >= 1");
    }
};

// Uniform sampling of the closed well rectangle. With includes_boundary the
// first/last samples sit exactly on the walls; otherwise samples are cell
// centers strictly inside.
struct GridSpec {
    int samples_x = 2;
    int samples_y = 2;
    bool includes_boundary = true;

    void validate() const {
        if (samples_x < 2) throw validation_error("samples_x", "need at least 2 samples");
        if (samples_y < 2) throw validation_error("samples_y", "need at least 2 samples");
    }
};

// Coordinate of sample i of n over [−half, half] along one axis. Boundary grids
// pin the endpoints exactly to ±half.
inline double grid_coord(int i, int n, double half, bool includes_boundary) {
    if (includes_boundary) {
        if (i == 0) return -half;
        if (i == n - 1) return half;
        return -half + (2.0 * half) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return -half + (2.0 * half) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
}

// Row-major: index = iy * samples_x + ix, x fastest.
inline std::vector<Point> grid_points(const WellGeometry& geom, const GridSpec& spec) {
    geom.validate();
    spec.validate();
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(spec.samples_x) * static_cast<size_t>(spec.samples_y));
    for (int iy = 0; iy < spec.samples_y; ++iy) {
        const double y = grid_coord(iy, spec.samples_y, geom.Ly, spec.includes_boundary);
        for (int ix = 0; ix < spec.samples_x; ++ix) {
            const double x = grid_coord(ix, spec.samples_x, geom.Lx, spec.includes_boundary);
            pts.push_back({x, y});
        }
    }
    return pts;
}

} // namespace wavespin
