#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wavespin/interaction.hpp"
#include "wavespin/residual.hpp"
#include "wavespin/topology.hpp"

namespace wavespin {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckOptions {
    bool sabotage_n_squared = false; // test hook: halve N² before running
    std::vector<StateIndex> states = {{1, 1, Spin::Up}, {2, 2, Spin::Up}};
    WellGeometry geom = {10e-9, 10e-9};
};

namespace check_detail {

// splitmix64 stream mapped to [0,1); bit-stable across toolchains.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    double next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
};

inline void push(std::vector<CheckResult>& out, const std::string& name, double measured,
                 double tolerance) {
    out.push_back({name, measured, tolerance, measured <= tolerance});
}

inline std::string tag(const StateIndex& st) {
    return "(" + std::to_string(st.nx) + "," + std::to_string(st.ny) + ")";
}

} // namespace check_detail

// Runs the library's invariants and returns one result per check. All
// tolerances are fixed here; `check` exits nonzero when any entry fails.
inline std::vector<CheckResult> run_checks(const CheckOptions& opts = {}) {
    using check_detail::push;
    using check_detail::tag;
    std::vector<CheckResult> out;
    const PhysicalConstants& k = codata2018();
    const WellGeometry geom = opts.geom;

    // constants table self-consistency
    {
        const double mu = k.e_charge * k.hbar / (2.0 * k.m_e);
        push(out, "constants: mu_B = e*hbar/(2 m_e)", std::abs(k.mu_B / mu - 1.0), 1e-9);
        push(out, "constants: lambda_C = 2*pi*lambda_c_reduced",
             std::abs(k.lambda_C / (2.0 * std::numbers::pi * k.lambda_c_reduced) - 1.0), 1e-12);
    }

    for (const StateIndex& base : opts.states) {
        StateIndex up = base, down = base;
        up.spin = Spin::Up;
        down.spin = Spin::Down;
        DerivedStateParams p = derive_params(up, geom, k);
        if (opts.sabotage_n_squared) p.n_squared *= 0.5;
        const std::string t = tag(base);

        // energy-eta identity and closed-form limits
        {
            // cancellation-free: (E-mc^2)(E+mc^2)/(mc^2)^2
            const double lhs = p.kinetic_energy() * (p.energy + k.rest_energy()) /
                               (k.rest_energy() * k.rest_energy());
            push(out, "core " + t + ": (E/mc^2)^2 - 1 = eta^2",
                 std::abs(lhs / (p.eta * p.eta) - 1.0), 1e-12);
            const WellGeometry big{2.0 * geom.Lx, 2.0 * geom.Ly};
            const DerivedStateParams pb = derive_params(up, big, k);
            push(out, "core " + t + ": doubling the well halves eta_x",
                 std::abs(pb.eta_x / (0.5 * p.eta_x) - 1.0), 1e-12);
            push(out, "core " + t + ": |N^2 - 4| <= eta^2",
                 std::abs(derive_params(up, geom, k).n_squared - 4.0), p.eta * p.eta);
        }

        // wall boundary condition on the large component
        {
            double worst = 0.0;
            for (int i = 0; i <= 32; ++i) {
                const double fx = -geom.Lx + 2.0 * geom.Lx * i / 32.0;
                const double fy = -geom.Ly + 2.0 * geom.Ly * i / 32.0;
                const Point walls[4] = {{fx, -geom.Ly}, {fx, geom.Ly}, {-geom.Lx, fy}, {geom.Lx, fy}};
                for (const Point& w : walls) {
                    worst = std::max(worst, std::abs(evaluate_spinor(p, up, geom, w).psi1));
                    worst = std::max(worst, std::abs(evaluate_spinor(p, down, geom, w).psi2));
                }
            }
            push(out, "spinor " + t + ": psi vanishes on the walls", worst, 1e-13);
        }

        // spin degeneracy of |Psi|^2 and pure-phase time dependence
        {
            double worst_deg = 0.0, worst_phase = 0.0;
            const GridSpec gs{65, 65, true};
            for (const Point& pt : grid_points(geom, gs)) {
                const double nu = norm2(evaluate_spinor(p, up, geom, pt).as_vec());
                const double nd = norm2(evaluate_spinor(p, down, geom, pt).as_vec());
                worst_deg = std::max(worst_deg, std::abs(nu - nd) / p.n_squared);
                for (double tt : {1e-15, 1e-12}) {
                    const double nt = norm2(evaluate_spinor(p, up, geom, pt, tt).as_vec());
                    worst_phase = std::max(worst_phase, std::abs(nt - nu) / p.n_squared);
                }
            }
            push(out, "spinor " + t + ": up/down |Psi|^2 degenerate", worst_deg, 1e-14);
            push(out, "spinor " + t + ": |Psi(t)| = |Psi(0)|", worst_phase, 1e-14);
        }

        // normalization: well-averaged charge density equals e
        {
            auto rho_fn = [&](Point pt) { return charge_density(p, up, geom, pt); };
            const double avg =
                integrate_well(rho_fn, geom, QuadratureSpec{}) / (4.0 * geom.Lx * geom.Ly);
            push(out, "density " + t + ": well-averaged rho/e = 1", std::abs(avg - 1.0), 1e-10);
        }

        const double j_scale = 2.0 * std::max(p.eta_x, p.eta_y) / p.sqrt1p_eta2;

        // Gordon decomposition closes: curl + translation = j/(ec)
        {
            check_detail::Rng rng(20240915ull + 97ull * base.nx + base.ny);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const Point pt{(-1.0 + 2.0 * rng.next()) * 0.98 * geom.Lx,
                               (-1.0 + 2.0 * rng.next()) * 0.98 * geom.Ly};
                const GordonTerms g = gordon_terms(p, up, geom, pt, k);
                const Vec2 j = current_density(p, up, geom, pt);
                worst = std::max(worst, std::hypot(g.curl_term.x + g.translation_term.x - j.x,
                                                   g.curl_term.y + g.translation_term.y - j.y) /
                                            j_scale);
            }
            push(out, "density " + t + ": gordon curl+translation = j", worst, 1e-12);
        }

        // bilinear route agrees with the closed form; spin flip negates j
        {
            double worst_bi = 0.0, worst_flip = 0.0;
            for (const Point& pt : grid_points(geom, GridSpec{65, 65, true})) {
                const Vec2 ja = current_density(p, up, geom, pt);
                const Vec2 jb = current_from_bilinear(evaluate_spinor(p, up, geom, pt));
                const Vec2 jd = current_density(p, down, geom, pt);
                worst_bi = std::max(worst_bi,
                                    std::hypot(ja.x - jb.x, ja.y - jb.y) / j_scale);
                worst_flip = std::max(worst_flip,
                                      std::hypot(ja.x + jd.x, ja.y + jd.y) / j_scale);
            }
            push(out, "density " + t + ": bilinear j = closed-form j", worst_bi, 1e-14);
            push(out, "density " + t + ": j(Down) = -j(Up)", worst_flip, 1e-14);
        }

        // stationarity and the speed-of-light bound
        push(out, "topology " + t + ": max |div j| (scaled)",
             divergence_audit(p, up, geom, GridSpec{65, 65, true}) /
                 (j_scale / std::min(geom.Lx, geom.Ly)),
             1e-14);
        {
            double worst = 0.0;
            for (const Point& pt : grid_points(geom, GridSpec{129, 129, true})) {
                const SpinVelocity v = spin_velocity(p, up, geom, pt);
                if (v.defined) worst = std::max(worst, std::hypot(v.v.x, v.v.y));
            }
            push(out, "density " + t + ": |v| <= c", worst, 1.0 + 1e-15);
        }

        // averaged spin density vs quadrature
        {
            const auto& dm = dirac_matrices();
            auto sz = [&](Point pt) {
                return bilinear(evaluate_spinor(p, up, geom, pt).as_vec(), dm.sigma_big_z).real();
            };
            const double avg = integrate_well(sz, geom, QuadratureSpec{}) / (4.0 * geom.Lx * geom.Ly);
            push(out, "density " + t + ": <Sigma_z> = 1/sqrt(1+eta^2)",
                 std::abs(avg - spin_z_expectation(p, up, geom)), 1e-12);
        }

        // interaction: uniform shift closed form, antisymmetry, corner sum
        {
            const QuadratureSpec q;
            const auto uni = energy_shift(p, up, geom, VectorPotentialSpec::uniform(1.0), q, k);
            push(out, "interaction " + t + ": uniform shift = 1/sqrt(1+eta^2)",
                 std::abs(uni.shift_mu_b_units * p.sqrt1p_eta2 - 1.0), 1e-10);
            const auto dn = energy_shift(p, down, geom, VectorPotentialSpec::uniform(1.0), q, k);
            push(out, "interaction " + t + ": shift(Down) = -shift(Up)",
                 std::abs((dn.shift_mu_b_units + uni.shift_mu_b_units) / uni.shift_mu_b_units),
                 1e-12);
            QuadratureSpec q2 = q;
            q2.order_or_panels *= 2;
            const auto uni2 = energy_shift(p, up, geom, VectorPotentialSpec::uniform(1.0), q2, k);
            push(out, "interaction " + t + ": quadrature converged",
                 std::abs(uni2.shift_mu_b_units / uni.shift_mu_b_units - 1.0), 1e-12);
            // the corner patches recenter their gauge, so their shifts sum to
            // the uniform value only when both quantum numbers are even (the
            // gauge-offset terms integrate over whole current periods)
            if (base.nx % 2 == 0 && base.ny % 2 == 0) {
                double corner_sum = 0.0;
                for (double sa : {-1.0, 1.0})
                    for (double sb : {-1.0, 1.0})
                        corner_sum +=
                            energy_shift(p, up, geom,
                                         VectorPotentialSpec::patch(1.0, sa * geom.Lx / 2.0,
                                                                    sb * geom.Ly / 2.0, geom),
                                         q, k)
                                .shift_mu_b_units;
                push(out, "interaction " + t + ": four corner patches sum to uniform",
                     std::abs(corner_sum / uni.shift_mu_b_units - 1.0), 1e-9);
            }
        }

        // vortex census
        {
            const GridSpec vg{16 * base.nx + 1, 16 * base.ny + 1, true};
            const VortexReport ru = find_vortices(p, up, geom, vg);
            const VortexReport rd = find_vortices(p, down, geom, vg);
            push(out, "topology " + t + ": vortex count = nx*ny",
                 std::abs(ru.count - base.nx * base.ny), 0.0);
            bool same = ru.count > 0, flipped = ru.count == rd.count;
            for (const auto& v : ru.vortices) same &= (v.winding == ru.vortices.front().winding);
            for (int i = 0; i < std::min(ru.count, rd.count); ++i)
                flipped &= (rd.vortices[i].winding == -ru.vortices[i].winding);
            push(out, "topology " + t + ": windings co-rotate", same ? 0.0 : 1.0, 0.0);
            push(out, "topology " + t + ": spin Down flips windings", flipped ? 0.0 : 1.0, 0.0);
        }

        // edge current keeps one sign around the inset loop
        {
            const auto prof = edge_profile(p, up, geom, 1e-9, 400);
            int sign_changes = 0;
            double prev = 0.0;
            for (const auto& s : prof) {
                if (s.j_tangential * prev < 0.0) ++sign_changes;
                if (s.j_tangential != 0.0) prev = s.j_tangential;
            }
            push(out, "topology " + t + ": edge flow is unidirectional", sign_changes, 0.0);
        }

        // Dirac eigenvalue residual via 4th-order finite differences
        {
            const auto rep = dirac_residual(p, up, geom, GridSpec{33, 33, true}, geom.Lx / 2048.0, k);
            push(out, "spinor " + t + ": Dirac residual", rep.max_rel, 1e-6);
        }
    }
    return out;
}

} // namespace wavespin
