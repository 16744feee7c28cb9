#pragma once

#include <cmath>

#include "wavespin/density.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/geometry.hpp"

namespace wavespin {

enum class PotentialVariant { Uniform, Patch };

// Vector potential producing a uniform B along z.
//
// Uniform:  A(x,y) = (B/2)(−y, x), defined on the whole plane.
// Patch:    A(x,y) = (B/2)(−(y−b), x−a) inside the closed rectangle
//           [a−half_w_x, a+half_w_x]×[b−half_w_y, b+half_w_y], zero elsewhere.
//
// The patch field is discontinuous at its boundary; no smoothing is applied,
// so quadrature over it must split at the patch edges. The fractional coupling
// values this potential produces are gauge dependent (a constant shift of A
// inside the patch changes them whenever ∬ j over the patch is nonzero); they
// are reported for this gauge only.
struct VectorPotentialSpec {
    PotentialVariant variant = PotentialVariant::Uniform;
    double b_field = 0.0;  // [T]
    double center_a = 0.0; // [m], Patch only
    double center_b = 0.0; // [m], Patch only
    double half_w_x = 0.0; // [m], Patch only
    double half_w_y = 0.0; // [m], Patch only

    static VectorPotentialSpec uniform(double b) {
        VectorPotentialSpec s;
        s.variant = PotentialVariant::Uniform;
        s.b_field = b;
        return s;
    }

    // Defaults half-widths to the quarter-well square (Lx/2, Ly/2).
    static VectorPotentialSpec patch(double b, double a, double bctr, const WellGeometry& geom,
                                     double wx = -1.0, double wy = -1.0) {
        VectorPotentialSpec s;
        s.variant = PotentialVariant::Patch;
        s.b_field = b;
        s.center_a = a;
        s.center_b = bctr;
        s.half_w_x = wx > 0.0 ? wx : geom.Lx / 2.0;
        s.half_w_y = wy > 0.0 ? wy : geom.Ly / 2.0;
        return s;
    }

    void validate() const {
        if (!std::isfinite(b_field)) throw validation_error("b_field", "must be finite");
        if (variant == PotentialVariant::Patch) {
            if (!(half_w_x > 0.0)) throw validation_error("half_w_x", "patch half-width must be > 0");
            if (!(half_w_y > 0.0)) throw validation_error("half_w_y", "patch half-width must be > 0");
        }
    }

    bool in_support(Point p) const {
        if (variant == PotentialVariant::Uniform) return true;
        return p.x >= center_a - half_w_x && p.x <= center_a + half_w_x &&
               p.y >= center_b - half_w_y && p.y <= center_b + half_w_y;
    }
};

inline Vec2 vector_potential(const VectorPotentialSpec& spec, Point p) {
    if (spec.variant == PotentialVariant::Uniform)
        return {-0.5 * spec.b_field * p.y, 0.5 * spec.b_field * p.x};
    if (!spec.in_support(p)) return {0.0, 0.0};
    return {-0.5 * spec.b_field * (p.y - spec.center_b),
            0.5 * spec.b_field * (p.x - spec.center_a)};
}

// Max |(∇×A)_z − B| over sample points at least one step inside the support,
// central differences. The field is linear there, so this is exact up to
// rounding: expect ≤ 1e-10·|B|.
inline double curl_check(const VectorPotentialSpec& spec, const WellGeometry& geom,
                         const GridSpec& samples) {
    spec.validate();
    geom.validate();
    samples.validate();
    const double hx = geom.Lx / (4.0 * samples.samples_x);
    const double hy = geom.Ly / (4.0 * samples.samples_y);
    double worst = 0.0;
    for (const Point& pt : grid_points(geom, samples)) {
        const Point arms[4] = {{pt.x + hx, pt.y}, {pt.x - hx, pt.y},
                               {pt.x, pt.y + hy}, {pt.x, pt.y - hy}};
        bool inside = true;
        for (const Point& a : arms)
            if (!spec.in_support(a)) inside = false;
        if (spec.variant == PotentialVariant::Patch) {
            // stay a full step inside the discontinuous boundary
            if (std::abs(pt.x - spec.center_a) > spec.half_w_x - 2.0 * hx) inside = false;
            if (std::abs(pt.y - spec.center_b) > spec.half_w_y - 2.0 * hy) inside = false;
        }
        if (!inside) continue;
        const double dAy_dx =
            (vector_potential(spec, arms[0]).y - vector_potential(spec, arms[1]).y) / (2.0 * hx);
        const double dAx_dy =
            (vector_potential(spec, arms[2]).x - vector_potential(spec, arms[3]).x) / (2.0 * hy);
        worst = std::max(worst, std::abs(dAy_dx - dAx_dy - spec.b_field));
    }
    return worst;
}

} // namespace wavespin
