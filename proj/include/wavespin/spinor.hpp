#pragma once

#include <cmath>
#include <complex>

#include "wavespin/dirac.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/geometry.hpp"
#include "wavespin/state.hpp"

namespace wavespin {

// Four complex amplitudes of Ψ at a spacetime point, dimensionless under the
// spatial-average normalization. For spin Up, ψ2 = ψ3 = 0 identically; the
// spin-Down partner occupies the complementary slots (ψ1 = ψ4 = 0).
struct SpinorValue {
    cplx psi1{};
    cplx psi2{};
    cplx psi3{};
    cplx psi4{};

    Vec4c as_vec() const { return {psi1, psi2, psi3, psi4}; }
};

struct SpinorGradient {
    Vec4c d_dx{}; // ∂Ψ/∂x, [1/m]
    Vec4c d_dy{}; // ∂Ψ/∂y, [1/m]
};

namespace detail {

struct TrigFactors {
    double sx, cx, sy, cy;
};

inline TrigFactors trig_factors(const DerivedStateParams& p, const WellGeometry& geom, Point pt) {
    const double ax = p.kx * (pt.x + geom.Lx);
    const double ay = p.ky * (pt.y + geom.Ly);
    return {std::sin(ax), std::cos(ax), std::sin(ay), std::cos(ay)};
}

inline void require_inside(const WellGeometry& geom, Point pt) {
    if (!geom.contains_closed(pt))
        throw domain_error("point lies outside the closed well rectangle");
}

} // namespace detail

// Stationary-state spinor, overall phase fixed so that at t = 0 the large
// component is real and non-negative at its first antinode.
//
// Spin Up is the standard upper-component solution:
//   ψ1 = N s_x s_y,  ψ4 = N(−i q_x c_x s_y + q_y s_x c_y)
// with s_x = sin[k_x(x+Lx)] etc. and q_i = η_i/(1+√(1+η²)).
//
// Spin Down is obtained from the two-spinor coupling with upper spinor
// ∝ (0,1)ᵀ; the same algebra that produces ψ4 above yields
//   ψ2 = N s_x s_y,  ψ3 = N(−i q_x c_x s_y − q_y s_x c_y),
// i.e. the q_y cross term changes sign because σ_y(0,1)ᵀ = (−i,0)ᵀ. This is a
// convention (any global sign works); it is the one that makes the Down
// current the exact negative of the Up current.
inline SpinorValue evaluate_spinor(const DerivedStateParams& p, const StateIndex& state,
                                   const WellGeometry& geom, Point pt, double t = 0.0,
                                   const PhysicalConstants& k = codata2018()) {
    detail::require_inside(geom, pt);
    const auto f = detail::trig_factors(p, geom, pt);
    const double N = std::sqrt(p.n_squared);
    const cplx phase = std::exp(cplx(0.0, -p.energy * t / k.hbar));
    const cplx i(0.0, 1.0);

    SpinorValue v;
    if (state.spin == Spin::Up) {
        v.psi1 = N * phase * f.sx * f.sy;
        v.psi4 = N * phase * (-i * p.q_x * f.cx * f.sy + p.q_y * f.sx * f.cy);
    } else {
        v.psi2 = N * phase * f.sx * f.sy;
        v.psi3 = N * phase * (-i * p.q_x * f.cx * f.sy - p.q_y * f.sx * f.cy);
    }
    return v;
}

// Upper/lower two-spinor pair (μ_A, μ_B) at t = 0, scaled consistently with
// evaluate_spinor: Ψ = (μ_A, μ_B)ᵀ.
inline std::pair<Vec2c, Vec2c> two_spinor_pair(const DerivedStateParams& p,
                                               const StateIndex& state,
                                               const WellGeometry& geom, Point pt) {
    const SpinorValue v = evaluate_spinor(p, state, geom, pt, 0.0);
    return {Vec2c{v.psi1, v.psi2}, Vec2c{v.psi3, v.psi4}};
}

// Closed-form first partials of the spinor (products of sin/cos). Finite
// differences are reserved for the residual check and test oracles.
inline SpinorGradient spinor_gradient(const DerivedStateParams& p, const StateIndex& state,
                                      const WellGeometry& geom, Point pt, double t = 0.0,
                                      const PhysicalConstants& k = codata2018()) {
    detail::require_inside(geom, pt);
    const auto f = detail::trig_factors(p, geom, pt);
    const double N = std::sqrt(p.n_squared);
    const cplx phase = std::exp(cplx(0.0, -p.energy * t / k.hbar));
    const cplx i(0.0, 1.0);

    SpinorGradient g;
    if (state.spin == Spin::Up) {
        g.d_dx[0] = N * phase * p.kx * f.cx * f.sy;
        g.d_dy[0] = N * phase * p.ky * f.sx * f.cy;
        g.d_dx[3] = N * phase * (i * p.q_x * p.kx * f.sx * f.sy + p.q_y * p.kx * f.cx * f.cy);
        g.d_dy[3] = N * phase * (-i * p.q_x * p.ky * f.cx * f.cy - p.q_y * p.ky * f.sx * f.sy);
    } else {
        g.d_dx[1] = N * phase * p.kx * f.cx * f.sy;
        g.d_dy[1] = N * phase * p.ky * f.sx * f.cy;
        g.d_dx[2] = N * phase * (i * p.q_x * p.kx * f.sx * f.sy - p.q_y * p.kx * f.cx * f.cy);
        g.d_dy[2] = N * phase * (-i * p.q_x * p.ky * f.cx * f.cy + p.q_y * p.ky * f.sx * f.sy);
    }
    return g;
}

} // namespace wavespin
