#pragma once

#include <cmath>

#include "wavespin/dirac.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/spinor.hpp"

namespace wavespin {

struct ResidualReport {
    double max_rel = 0.0; // max ‖(cα·(−iħ∇)+γ⁰mc²)Ψ − ℰΨ‖ / (ℰ‖Ψ‖)
    Point at{};           // where the maximum occurred
    int points_evaluated = 0;
};

// Independent verification that the closed-form spinor solves the Dirac
// eigenvalue problem: the gradient is taken with 4th-order central
// differences, so nothing from the analytic-derivative path enters here.
// Sample points come from `spec` restricted to at least 4·fd_step away from
// the walls (the widest stencil arm is 2·fd_step). Points where ‖Ψ‖ is at
// rounding level (exact node crossings) are skipped.
inline ResidualReport dirac_residual(const DerivedStateParams& p, const StateIndex& state,
                                     const WellGeometry& geom, const GridSpec& spec,
                                     double fd_step,
                                     const PhysicalConstants& k = codata2018()) {
    geom.validate();
    spec.validate();
    const double min_half = std::min(geom.Lx, geom.Ly);
    if (!(fd_step > 0.0) || fd_step > min_half / 256.0)
        throw config_error("fd_step must be positive and at most min(Lx,Ly)/256");

    const auto& dm = dirac_matrices();
    const double mc2 = k.rest_energy();
    const double margin = 4.0 * fd_step;

    auto psi_at = [&](double x, double y) {
        return evaluate_spinor(p, state, geom, {x, y}, 0.0, k).as_vec();
    };

    ResidualReport rep;
    for (const Point& pt : grid_points(geom, spec)) {
        if (pt.x < -geom.Lx + margin || pt.x > geom.Lx - margin) continue;
        if (pt.y < -geom.Ly + margin || pt.y > geom.Ly - margin) continue;

        const Vec4c psi = psi_at(pt.x, pt.y);
        const double nrm = std::sqrt(norm2(psi));
        if (nrm < 1e-9 * std::sqrt(p.n_squared)) continue;

        // D4 central stencil: f' ≈ (−f₊₂ + 8f₊₁ − 8f₋₁ + f₋₂) / (12h)
        Vec4c dx{}, dy{};
        {
            const Vec4c fp2 = psi_at(pt.x + 2 * fd_step, pt.y);
            const Vec4c fp1 = psi_at(pt.x + fd_step, pt.y);
            const Vec4c fm1 = psi_at(pt.x - fd_step, pt.y);
            const Vec4c fm2 = psi_at(pt.x - 2 * fd_step, pt.y);
            for (int i = 0; i < 4; ++i)
                dx[i] = (-fp2[i] + 8.0 * fp1[i] - 8.0 * fm1[i] + fm2[i]) / (12.0 * fd_step);
        }
        {
            const Vec4c fp2 = psi_at(pt.x, pt.y + 2 * fd_step);
            const Vec4c fp1 = psi_at(pt.x, pt.y + fd_step);
            const Vec4c fm1 = psi_at(pt.x, pt.y - fd_step);
            const Vec4c fm2 = psi_at(pt.x, pt.y - 2 * fd_step);
            for (int i = 0; i < 4; ++i)
                dy[i] = (-fp2[i] + 8.0 * fp1[i] - 8.0 * fm1[i] + fm2[i]) / (12.0 * fd_step);
        }

        const Vec4c ax_dx = mat_apply(dm.alpha_x, dx);
        const Vec4c ay_dy = mat_apply(dm.alpha_y, dy);
        const Vec4c g0_psi = mat_apply(dm.gamma0, psi);
        const cplx mi(0.0, -1.0);

        double res2 = 0.0;
        for (int i = 0; i < 4; ++i) {
            const cplx h_psi =
                k.c * mi * k.hbar * (ax_dx[i] + ay_dy[i]) + mc2 * g0_psi[i];
            res2 += std::norm(h_psi - p.energy * psi[i]);
        }
        const double rel = std::sqrt(res2) / (p.energy * nrm);
        ++rep.points_evaluated;
        if (rel > rep.max_rel) {
            rep.max_rel = rel;
            rep.at = pt;
        }
    }
    if (rep.points_evaluated == 0)
        throw config_error("grid too coarse: no sample point clears the 4*fd_step wall margin");
    return rep;
}

} // namespace wavespin
