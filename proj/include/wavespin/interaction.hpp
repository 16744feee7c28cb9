#pragma once

#include <cmath>
#include <vector>

#include "wavespin/density.hpp"
#include "wavespin/parallel.hpp"
#include "wavespin/potential.hpp"
#include "wavespin/quadrature.hpp"

namespace wavespin {

// First-order energy shift E⁽¹⁾ of a state in a weak applied field, evaluated
// with the unperturbed field-free state (no self-consistent coupling).
struct InteractionResult {
    double shift_mu_b_units = 0.0; // E⁽¹⁾ / (μ_B B); 0 by convention when B = 0
    double shift_ev = 0.0;         // E⁽¹⁾ [eV] at the given B
    StateIndex state;
    VectorPotentialSpec potential;
    QuadratureSpec quad;
    double est_error = 0.0; // |shift difference| between two quadrature refinements
};

namespace detail {

inline std::vector<double> split_lines_x(const WellGeometry& geom,
                                         const VectorPotentialSpec& pot, bool split_edges) {
    std::vector<double> s{0.0}; // well midline
    if (pot.variant == PotentialVariant::Patch && split_edges) {
        s.push_back(pot.center_a - pot.half_w_x);
        s.push_back(pot.center_a + pot.half_w_x);
    }
    (void)geom;
    return s;
}

inline std::vector<double> split_lines_y(const WellGeometry& geom,
                                         const VectorPotentialSpec& pot, bool split_edges) {
    std::vector<double> s{0.0};
    if (pot.variant == PotentialVariant::Patch && split_edges) {
        s.push_back(pot.center_b - pot.half_w_y);
        s.push_back(pot.center_b + pot.half_w_y);
    }
    (void)geom;
    return s;
}

// (1/(4 Lx Ly)) ∬ j·A dxdy in joules, j in ec units.
inline double shift_joules(const DerivedStateParams& p, const StateIndex& state,
                           const WellGeometry& geom, const VectorPotentialSpec& pot,
                           const QuadratureSpec& quad, const PhysicalConstants& k) {
    auto integrand = [&](Point pt) {
        const Vec2 j = current_density(p, state, geom, pt);
        const Vec2 a = vector_potential(pot, pt);
        return j.x * a.x + j.y * a.y;
    };
    const double raw = integrate_well(integrand, geom, quad,
                                      split_lines_x(geom, pot, quad.split_at_patch_edges),
                                      split_lines_y(geom, pot, quad.split_at_patch_edges));
    return k.e_charge * k.c * raw / (4.0 * geom.Lx * geom.Ly);
}

inline QuadratureSpec refined(const QuadratureSpec& q) {
    QuadratureSpec r = q;
    if (q.rule == QuadratureRule::GaussLegendreTensor)
        r.order_or_panels = q.order_or_panels + 16;
    else
        r.order_or_panels = q.order_or_panels * 2;
    return r;
}

} // namespace detail

inline InteractionResult energy_shift(const DerivedStateParams& p, const StateIndex& state,
                                      const WellGeometry& geom, const VectorPotentialSpec& pot,
                                      const QuadratureSpec& quad,
                                      const PhysicalConstants& k = codata2018()) {
    state.validate();
    geom.validate();
    pot.validate();
    quad.validate();

    InteractionResult r;
    r.state = state;
    r.potential = pot;
    r.quad = quad;

    if (pot.b_field == 0.0) return r; // shift is identically zero; units fixed by convention

    const double e1 = detail::shift_joules(p, state, geom, pot, quad, k);
    const double e1_ref = detail::shift_joules(p, state, geom, pot, detail::refined(quad), k);
    const double mu_b_b = k.mu_B * pot.b_field;
    r.shift_mu_b_units = e1 / mu_b_b;
    r.shift_ev = e1 / k.e_charge;
    r.est_error = std::abs((e1_ref - e1) / mu_b_b);
    return r;
}

struct ZeemanSplitting {
    double delta_mu_b_units = 0.0; // shift(Up) − shift(Down), in μ_B·B
    double delta_ev = 0.0;
    InteractionResult up;
    InteractionResult down;
};

// Up/Down shift difference under an arbitrary potential (the Down shift is
// the exact negative of the Up shift for every potential treated here).
inline ZeemanSplitting zeeman_splitting(const DerivedStateParams& p, const StateIndex& state,
                                        const WellGeometry& geom,
                                        const VectorPotentialSpec& pot,
                                        const QuadratureSpec& quad,
                                        const PhysicalConstants& k = codata2018()) {
    StateIndex up = state, down = state;
    up.spin = Spin::Up;
    down.spin = Spin::Down;
    ZeemanSplitting z;
    z.up = energy_shift(p, up, geom, pot, quad, k);
    z.down = energy_shift(p, down, geom, pot, quad, k);
    z.delta_mu_b_units = z.up.shift_mu_b_units - z.down.shift_mu_b_units;
    z.delta_ev = z.up.shift_ev - z.down.shift_ev;
    return z;
}

// Splitting under the uniform vortex potential: 2/√(1+η²) in μ_B·B units.
inline ZeemanSplitting zeeman_splitting(const DerivedStateParams& p, const StateIndex& state,
                                        const WellGeometry& geom, double b_field,
                                        const QuadratureSpec& quad,
                                        const PhysicalConstants& k = codata2018()) {
    return zeeman_splitting(p, state, geom, VectorPotentialSpec::uniform(b_field), quad, k);
}

// Energy-shift map over patch centers (a,b) ∈ [−Lx/2, Lx/2]×[−Ly/2, Ly/2]
// (boundary grids hit the corners exactly). Row-major, a fastest.
struct ScanResult {
    GridSpec spec;
    double half_a = 0.0; // scan range half-width in a
    double half_b = 0.0;
    std::vector<double> shift_mu_b_units;
    std::vector<double> centers_a; // per column
    std::vector<double> centers_b; // per row
};

// Patch centers whose patch would leave the well are rejected unless `clip`
// is set, in which case only the patch-well intersection is integrated (the
// integrand vanishes outside the patch, so clipping is just not rejecting).
// Patch half-widths default to the quarter-well square.
inline ScanResult scan_patch(const DerivedStateParams& p, const StateIndex& state,
                             const WellGeometry& geom, double b_field,
                             const GridSpec& scan_grid, const QuadratureSpec& quad,
                             bool clip = false, double patch_half_x = -1.0,
                             double patch_half_y = -1.0,
                             const PhysicalConstants& k = codata2018()) {
    state.validate();
    geom.validate();
    scan_grid.validate();
    quad.validate();

    ScanResult res;
    res.spec = scan_grid;
    res.half_a = geom.Lx / 2.0;
    res.half_b = geom.Ly / 2.0;
    res.centers_a.resize(scan_grid.samples_x);
    res.centers_b.resize(scan_grid.samples_y);
    for (int i = 0; i < scan_grid.samples_x; ++i)
        res.centers_a[i] = grid_coord(i, scan_grid.samples_x, res.half_a, scan_grid.includes_boundary);
    for (int i = 0; i < scan_grid.samples_y; ++i)
        res.centers_b[i] = grid_coord(i, scan_grid.samples_y, res.half_b, scan_grid.includes_boundary);

    const double wx = patch_half_x > 0.0 ? patch_half_x : geom.Lx / 2.0;
    const double wy = patch_half_y > 0.0 ? patch_half_y : geom.Ly / 2.0;
    if (!clip) {
        for (double a : res.centers_a)
            if (a - wx < -geom.Lx - 1e-18 || a + wx > geom.Lx + 1e-18)
                throw validation_error("scan_grid", "patch leaves the well; pass clip to integrate the intersection");
        for (double b : res.centers_b)
            if (b - wy < -geom.Ly - 1e-18 || b + wy > geom.Ly + 1e-18)
                throw validation_error("scan_grid", "patch leaves the well; pass clip to integrate the intersection");
    }

    const std::size_t n =
        static_cast<std::size_t>(scan_grid.samples_x) * static_cast<std::size_t>(scan_grid.samples_y);
    res.shift_mu_b_units.assign(n, 0.0);
    parallel_for(n, [&](std::size_t idx) {
        const int iy = static_cast<int>(idx) / scan_grid.samples_x;
        const int ix = static_cast<int>(idx) % scan_grid.samples_x;
        const auto pot =
            VectorPotentialSpec::patch(b_field, res.centers_a[ix], res.centers_b[iy], geom, wx, wy);
        res.shift_mu_b_units[idx] = energy_shift(p, state, geom, pot, quad, k).shift_mu_b_units;
    });
    return res;
}

} // namespace wavespin
