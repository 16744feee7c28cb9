#pragma once

#include <cmath>
#include <numbers>

#include "wavespin/constants.hpp"
#include "wavespin/geometry.hpp"

namespace wavespin {

// Per-state scalars shared by every other module.
//
//   k_x = π n_x / (2 L_x)            wave vectors
//   η_i = ħ k_i / (m_e c)            dimensionless geometric factors
//   ℰ   = m_e c² √(1+η²)             eigen energy
//   N²  = 2 (1+√(1+η²)) / √(1+η²)    normalization
//
// N² follows the spatial-average convention (1/(4 Lx Ly)) ∬ ρ dxdy = e, which
// keeps the charge density, current density and interaction-energy closed
// forms mutually exact (see the normalization test in the density suite).
struct DerivedStateParams {
    double kx = 0.0;        // [1/m]
    double ky = 0.0;        // [1/m]
    double eta_x = 0.0;
    double eta_y = 0.0;
    double eta = 0.0;
    double energy = 0.0;    // [J]
    double n_squared = 0.0;
    double p_z = 0.0;       // [kg m/s], fixed 0 for this planar family

    // Frequently used combinations.
    double sqrt1p_eta2 = 0.0;                 // √(1+η²)
    double q_x = 0.0;                         // η_x / (1+√(1+η²))
    double q_y = 0.0;                         // η_y / (1+√(1+η²))

    // ℰ − m_e c², stored from the cancellation-free form
    // m_e c² η²/(1+√(1+η²)) since the direct difference would lose half the
    // significant digits at η ~ 1e-4.
    double kinetic = 0.0; // [J]

    double kinetic_energy(const PhysicalConstants& = codata2018()) const { return kinetic; }
};

inline DerivedStateParams derive_params(const StateIndex& state, const WellGeometry& geom,
                                        const PhysicalConstants& k = codata2018()) {
    state.validate();
    geom.validate();

    DerivedStateParams p;
    p.kx = std::numbers::pi * state.nx / (2.0 * geom.Lx);
    p.ky = std::numbers::pi * state.ny / (2.0 * geom.Ly);
    p.eta_x = k.hbar * p.kx / (k.m_e * k.c);
    p.eta_y = k.hbar * p.ky / (k.m_e * k.c);
    p.eta = std::hypot(p.eta_x, p.eta_y);
    p.sqrt1p_eta2 = std::sqrt(1.0 + p.eta * p.eta);
    p.energy = k.rest_energy() * p.sqrt1p_eta2;
    p.kinetic = k.rest_energy() * p.eta * p.eta / (1.0 + p.sqrt1p_eta2);
    p.n_squared = 2.0 * (1.0 + p.sqrt1p_eta2) / p.sqrt1p_eta2;
    p.q_x = p.eta_x / (1.0 + p.sqrt1p_eta2);
    p.q_y = p.eta_y / (1.0 + p.sqrt1p_eta2);
    p.p_z = 0.0;
    return p;
}

// Closed form for η from the Compton wavelength h/(m_e c). Equivalent to the
// ħk/(m_e c) route; kept as an algebraic cross-check of the constant table.
inline double eta_from_compton(const StateIndex& state, const WellGeometry& geom,
                               const PhysicalConstants& k = codata2018()) {
    const double ax = state.nx * k.lambda_C / (4.0 * geom.Lx);
    const double ay = state.ny * k.lambda_C / (4.0 * geom.Ly);
    return std::hypot(ax, ay);
}

} // namespace wavespin
