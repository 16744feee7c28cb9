#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "wavespin/errors.hpp"
#include "wavespin/geometry.hpp"

namespace wavespin {

enum class QuadratureRule { GaussLegendreTensor, CompositeSimpson };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::GaussLegendreTensor;
    int order_or_panels = 64; // GL points per axis, or Simpson panels per axis
    bool split_at_patch_edges = true;

    void validate() const {
        if (rule == QuadratureRule::GaussLegendreTensor && order_or_panels < 8)
            throw validation_error("order_or_panels", "Gauss-Legendre order must be >= 8");
        if (rule == QuadratureRule::CompositeSimpson && order_or_panels < 64)
            throw validation_error("order_or_panels", "Simpson panels must be >= 64 per axis");
    }
};

namespace quad_detail {

struct Rule1D {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre nodes via Newton on P_n, seeded with the Chebyshev-like
// asymptotic roots. Converges to machine precision in a handful of steps.
inline Rule1D make_gauss_legendre(int n) {
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

inline const Rule1D& gauss_legendre(int n) {
    static std::map<int, Rule1D> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

// Composite Simpson on [-1,1] with `panels` sub-intervals (bumped to even).
inline Rule1D make_simpson(int panels) {
    if (panels % 2 == 1) ++panels;
    Rule1D r;
    const int n = panels + 1;
    const double h = 2.0 / panels;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = -1.0 + i * h;
        r.weights[i] = (i == 0 || i == n - 1) ? h / 3.0 : (i % 2 == 1 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    }
    return r;
}

inline const Rule1D& rule_for(const QuadratureSpec& q) {
    if (q.rule == QuadratureRule::GaussLegendreTensor) return gauss_legendre(q.order_or_panels);
    static std::map<int, Rule1D> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q.order_or_panels);
    if (it == cache.end()) it = cache.emplace(q.order_or_panels, make_simpson(q.order_or_panels)).first;
    return it->second;
}

// Partition of [-half, half] at the given interior split lines, sorted and
// deduplicated; lines at or beyond the walls are dropped (they do not change
// the partition).
inline std::vector<double> breakpoints(double half, const std::vector<double>& splits) {
    std::vector<double> b;
    b.push_back(-half);
    std::vector<double> s = splits;
    std::sort(s.begin(), s.end());
    for (double v : s) {
        if (v <= -half || v >= half) continue;
        if (!b.empty() && std::abs(v - b.back()) < 1e-18 * std::max(1.0, half)) continue;
        b.push_back(v);
    }
    b.push_back(half);
    return b;
}

} // namespace quad_detail

// Tensor-product quadrature of f over the well, split into sub-rectangles at
// the given interior lines. Sub-rectangles are traversed in sorted order and
// each tensor sum accumulates row-major, so the result is bit-stable
// regardless of caller parallelism.
template <typename F>
double integrate_well(F&& f, const WellGeometry& geom, const QuadratureSpec& quad,
                      const std::vector<double>& split_lines_x = {},
                      const std::vector<double>& split_lines_y = {}) {
    geom.validate();
    quad.validate();
    const auto& rule = quad_detail::rule_for(quad);
    const auto bx = quad_detail::breakpoints(geom.Lx, split_lines_x);
    const auto by = quad_detail::breakpoints(geom.Ly, split_lines_y);

    double total = 0.0;
    for (std::size_t jy = 0; jy + 1 < by.size(); ++jy) {
        for (std::size_t jx = 0; jx + 1 < bx.size(); ++jx) {
            const double x0 = bx[jx], x1 = bx[jx + 1];
            const double y0 = by[jy], y1 = by[jy + 1];
            const double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
            const double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
            double cell = 0.0;
            for (std::size_t iy = 0; iy < rule.nodes.size(); ++iy) {
                const double y = cy + hy * rule.nodes[iy];
                double row = 0.0;
                for (std::size_t ix = 0; ix < rule.nodes.size(); ++ix) {
                    const double x = cx + hx * rule.nodes[ix];
                    const double v = f(Point{x, y});
                    if (!std::isfinite(v))
                        throw numerical_error("non-finite integrand sample at (" +
                                              std::to_string(x) + ", " + std::to_string(y) + ")");
                    row += rule.weights[ix] * v;
                }
                cell += rule.weights[iy] * row;
            }
            total += cell * hx * hy;
        }
    }
    return total;
}

} // namespace wavespin
