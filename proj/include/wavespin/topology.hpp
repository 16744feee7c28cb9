#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wavespin/density.hpp"
#include "wavespin/errors.hpp"

namespace wavespin {

// A first-order vortex: an isolated stagnation point of unit Poincare index.
// `winding` records the sense of the flow around it, +1 counterclockwise and
// −1 clockwise (the index itself is +1 for either sense, since negating a
// field leaves det J unchanged; the sense is what distinguishes the spins).
struct Vortex {
    Point center;
    int winding = 0;        // +1 or −1 for this family of states
    double circulation = 0; // ∮ j·dl around the center [ec·m], CCW positive
};

struct VortexReport {
    std::vector<Vortex> vortices; // sorted by center y, then x
    int count = 0;
    int degenerate_cells = 0; // discarded stagnation cells (node lines, saddles)
};

namespace topo_detail {

// Winding number of j along the rectangle boundary [x0,x1]×[y0,y1], from
// accumulated direction angles. Sampling is refined until every consecutive
// turn is small; a first-order vortex converges quickly, whereas loops that
// cross a node line of j keep a near-π direction jump at any practical
// density (the transverse component collapses faster than the sampling can
// resolve) and are classified degenerate. Returns 0 for degenerate loops and
// for loops through near-zero samples; neither can hold a first-order vortex.
inline int box_winding(const DerivedStateParams& p, const StateIndex& state,
                       const WellGeometry& geom, double x0, double x1, double y0, double y1,
                       double min_mag) {
    for (int per_side = 8; per_side <= 256; per_side *= 2) {
        std::vector<Point> loop;
        loop.reserve(static_cast<std::size_t>(4 * per_side));
        for (int i = 0; i < per_side; ++i)
            loop.push_back({x0 + (x1 - x0) * i / per_side, y0});
        for (int i = 0; i < per_side; ++i)
            loop.push_back({x1, y0 + (y1 - y0) * i / per_side});
        for (int i = 0; i < per_side; ++i)
            loop.push_back({x1 - (x1 - x0) * i / per_side, y1});
        for (int i = 0; i < per_side; ++i)
            loop.push_back({x0, y1 - (y1 - y0) * i / per_side});

        double total = 0.0, worst_turn = 0.0, prev = 0.0;
        bool first = true;
        for (std::size_t i = 0; i <= loop.size(); ++i) {
            const Point pt = loop[i % loop.size()];
            const Vec2 j = current_density(p, state, geom, pt);
            if (std::hypot(j.x, j.y) < min_mag) return 0;
            const double ang = std::atan2(j.y, j.x);
            if (!first) {
                double d = ang - prev;
                while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
                while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
                total += d;
                worst_turn = std::max(worst_turn, std::abs(d));
            }
            prev = ang;
            first = false;
        }
        if (worst_turn < 1.0)
            return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
    }
    return 0;
}

} // namespace topo_detail

// Trapezoidal ∮ j·dl on a circle, counterclockwise-positive. [ec·m]
inline double circulation(const DerivedStateParams& p, const StateIndex& state,
                          const WellGeometry& geom, Point loop_center, double loop_radius,
                          int n_segments) {
    if (n_segments < 64) throw validation_error("n_segments", "need at least 64 segments");
    if (!(loop_radius > 0.0)) throw validation_error("loop_radius", "must be > 0");
    if (std::abs(loop_center.x) + loop_radius > geom.Lx ||
        std::abs(loop_center.y) + loop_radius > geom.Ly)
        throw validation_error("loop_radius", "loop leaves the well");

    double sum = 0.0;
    for (int i = 0; i < n_segments; ++i) {
        const double th = 2.0 * std::numbers::pi * i / n_segments;
        const Point pt{loop_center.x + loop_radius * std::cos(th),
                       loop_center.y + loop_radius * std::sin(th)};
        const Vec2 j = current_density(p, state, geom, pt);
        sum += -j.x * std::sin(th) + j.y * std::cos(th);
    }
    return sum * (2.0 * std::numbers::pi * loop_radius / n_segments);
}

// Stagnation points of j with unit index. Sign-change candidate cells are
// found on a detection lattice offset from the walls by an irrational cell
// fraction (the exact vortex coordinates are rational fractions of the well,
// so they never land on cell edges), then refined by recursive subdivision on
// the index test down to 1e-12 m boxes. Node-line cells are degenerate and
// are reported only in the diagnostic count; the reported winding is the
// orientation of the circulation around each refined center.
inline VortexReport find_vortices(const DerivedStateParams& p, const StateIndex& state,
                                  const WellGeometry& geom, const GridSpec& grid) {
    state.validate();
    geom.validate();
    grid.validate();
    if (grid.samples_x < 16 * state.nx)
        throw validation_error("samples_x", "grid too coarse: need at least 16*nx samples");
    if (grid.samples_y < 16 * state.ny)
        throw validation_error("samples_y", "grid too coarse: need at least 16*ny samples");

    const int cx = grid.samples_x;
    const int cy = grid.samples_y;
    const double hx = 2.0 * geom.Lx / (cx + 1);
    const double hy = 2.0 * geom.Ly / (cy + 1);
    const double offset = 0.5 * (std::sqrt(5.0) - 1.0); // golden fraction
    const double j_scale = 2.0 * std::max(p.eta_x, p.eta_y) / p.sqrt1p_eta2;
    const double min_mag = 1e-8 * j_scale;

    VortexReport rep;
    for (int iy = 0; iy < cy; ++iy) {
        const double y0 = -geom.Ly + (iy + offset) * hy;
        const double y1 = y0 + hy;
        if (y1 >= geom.Ly) continue;
        for (int ix = 0; ix < cx; ++ix) {
            const double x0 = -geom.Lx + (ix + offset) * hx;
            const double x1 = x0 + hx;
            if (x1 >= geom.Lx) continue;

            // cheap pre-filter: both components must change sign over the cell
            const Point corners[4] = {{x0, y0}, {x1, y0}, {x0, y1}, {x1, y1}};
            bool px = false, nx_ = false, py = false, ny_ = false;
            for (const Point& c : corners) {
                const Vec2 j = current_density(p, state, geom, c);
                px |= j.x > 0;
                nx_ |= j.x < 0;
                py |= j.y > 0;
                ny_ |= j.y < 0;
            }
            if (!(px && nx_ && py && ny_)) continue;

            const int w = topo_detail::box_winding(p, state, geom, x0, x1, y0, y1, min_mag);
            if (w == 0) {
                ++rep.degenerate_cells;
                continue;
            }

            // subdivision refinement; off-center split fractions are fallbacks
            // for the case where a split line grazes the zero
            double bx0 = x0, bx1 = x1, by0 = y0, by1 = y1;
            static constexpr double kFractions[3] = {0.5, 0.618034, 0.381966};
            while (std::max(bx1 - bx0, by1 - by0) > 1e-12) {
                bool descended = false;
                for (double f : kFractions) {
                    const double mx = bx0 + f * (bx1 - bx0);
                    const double my = by0 + f * (by1 - by0);
                    const double sx[3] = {bx0, mx, bx1};
                    const double sy[3] = {by0, my, by1};
                    for (int qy = 0; qy < 2 && !descended; ++qy)
                        for (int qx = 0; qx < 2 && !descended; ++qx) {
                            if (topo_detail::box_winding(p, state, geom, sx[qx], sx[qx + 1],
                                                         sy[qy], sy[qy + 1], min_mag) == w) {
                                bx0 = sx[qx];
                                bx1 = sx[qx + 1];
                                by0 = sy[qy];
                                by1 = sy[qy + 1];
                                descended = true;
                            }
                        }
                    if (descended) break;
                }
                if (!descended) break;
            }

            Vortex v;
            v.center = {0.5 * (bx0 + bx1), 0.5 * (by0 + by1)};
            const double r = 0.45 * std::min({geom.Lx / state.nx, geom.Ly / state.ny,
                                              geom.Lx - std::abs(v.center.x),
                                              geom.Ly - std::abs(v.center.y)});
            v.circulation = circulation(p, state, geom, v.center, r, 256);
            v.winding = v.circulation >= 0.0 ? +1 : -1;
            rep.vortices.push_back(v);
        }
    }
    std::sort(rep.vortices.begin(), rep.vortices.end(), [](const Vortex& a, const Vortex& b) {
        return a.center.y != b.center.y ? a.center.y < b.center.y : a.center.x < b.center.x;
    });
    rep.count = static_cast<int>(rep.vortices.size());
    return rep;
}

struct EdgeSample {
    double arclength = 0.0; // from (−Lx+inset, −Ly+inset), counterclockwise [m]
    double j_tangential = 0.0; // wall-parallel component in travel direction [ec]
};

// Tangential current on the rectangular loop inset from the walls.
inline std::vector<EdgeSample> edge_profile(const DerivedStateParams& p, const StateIndex& state,
                                            const WellGeometry& geom, double inset,
                                            int n_samples) {
    geom.validate();
    if (!(inset > 0.0) || inset >= std::min(geom.Lx, geom.Ly) / 4.0)
        throw validation_error("inset", "inset must lie in (0, min(Lx,Ly)/4)");
    if (n_samples < 8) throw validation_error("n_samples", "need at least 8 samples");

    const double ax = geom.Lx - inset, ay = geom.Ly - inset;
    const double wx = 2.0 * ax, wy = 2.0 * ay;
    const double perim = 2.0 * (wx + wy);

    std::vector<EdgeSample> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double s = perim * i / n_samples;
        Point pt;
        Vec2 tangent;
        if (s < wx) { // bottom, heading +x
            pt = {-ax + s, -ay};
            tangent = {1.0, 0.0};
        } else if (s < wx + wy) { // right, heading +y
            pt = {ax, -ay + (s - wx)};
            tangent = {0.0, 1.0};
        } else if (s < 2.0 * wx + wy) { // top, heading −x
            pt = {ax - (s - wx - wy), ay};
            tangent = {-1.0, 0.0};
        } else { // left, heading −y
            pt = {-ax, ay - (s - 2.0 * wx - wy)};
            tangent = {0.0, -1.0};
        }
        const Vec2 j = current_density(p, state, geom, pt);
        out.push_back({s, j.x * tangent.x + j.y * tangent.y});
    }
    return out;
}

// Max |∂x j_x + ∂y j_y| over interior grid points, from the closed-form
// derivatives. Stationarity of the charge density means this is an identity;
// what is measured is the floating-point defect of η_y k_x − η_x k_y. [ec/m]
inline double divergence_audit(const DerivedStateParams& p, const StateIndex& state,
                               const WellGeometry& geom, const GridSpec& grid) {
    geom.validate();
    grid.validate();
    const double sgn = spin_sign(state.spin);
    double worst = 0.0;
    for (const Point& pt : grid_points(geom, grid)) {
        if (!geom.contains_open(pt)) continue;
        const double s2x = std::sin(2.0 * p.kx * (pt.x + geom.Lx));
        const double s2y = std::sin(2.0 * p.ky * (pt.y + geom.Ly));
        const double djx_dx = sgn * (2.0 * p.eta_y / p.sqrt1p_eta2) * p.kx * s2x * s2y;
        const double djy_dy = -sgn * (2.0 * p.eta_x / p.sqrt1p_eta2) * p.ky * s2y * s2x;
        worst = std::max(worst, std::abs(djx_dx + djy_dy));
    }
    return worst;
}

} // namespace wavespin
