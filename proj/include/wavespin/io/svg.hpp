#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "wavespin/density.hpp"
#include "wavespin/io/format.hpp"

namespace wavespin {

namespace svg_detail {

// Perceptually ordered ramp (viridis anchor points), quantized to 256 steps.
inline std::string ramp_color(double t) {
    static constexpr double anchors[9][3] = {
        {68, 1, 84},   {72, 40, 120},  {62, 74, 137},  {49, 104, 142}, {38, 130, 142},
        {31, 158, 137}, {53, 183, 121}, {109, 205, 89}, {253, 231, 37}};
    t = std::clamp(t, 0.0, 1.0);
    t = std::floor(t * 255.0) / 255.0; // 256-step quantization
    const double pos = t * 8.0;
    const int lo = std::min(7, static_cast<int>(pos));
    const double f = pos - lo;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(anchors[lo][0] + f * (anchors[lo + 1][0] - anchors[lo][0]))),
                  static_cast<int>(std::lround(anchors[lo][1] + f * (anchors[lo + 1][1] - anchors[lo][1]))),
                  static_cast<int>(std::lround(anchors[lo][2] + f * (anchors[lo + 1][2] - anchors[lo][2]))));
    return buf;
}

inline std::string px(double v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

constexpr double kCanvas = 800.0;
constexpr double kLegend = 60.0;

inline void open_svg(std::ostringstream& out, double extra_h) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << px(kCanvas + extra_h) << "\" viewBox=\"0 0 800 " << px(kCanvas + extra_h) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"" << px(kCanvas + extra_h)
        << "\" fill=\"#ffffff\"/>\n";
}

inline void legend_bar(std::ostringstream& out, double vmin, double vmax) {
    const double y = kCanvas + 14.0;
    const double w = 600.0, x0 = 100.0, h = 16.0;
    for (int i = 0; i < 256; ++i) {
        out << "<rect x=\"" << px(x0 + w * i / 256.0) << "\" y=\"" << px(y) << "\" width=\""
            << px(w / 256.0 + 0.5) << "\" height=\"" << px(h) << "\" fill=\""
            << ramp_color(i / 255.0) << "\"/>\n";
    }
    out << "<text x=\"" << px(x0) << "\" y=\"" << px(y + h + 16.0)
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"start\">"
        << format_sci(vmin) << "</text>\n";
    out << "<text x=\"" << px(x0 + w) << "\" y=\"" << px(y + h + 16.0)
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
        << format_sci(vmax) << "</text>\n";
}

} // namespace svg_detail

// Heatmap of a scalar grid: one rect per sample cell on the fixed 800 px
// canvas plus a labeled color-bar legend.
inline std::string field_to_svg_heatmap(const FieldGrid& grid) {
    using namespace svg_detail;
    std::ostringstream out;
    open_svg(out, kLegend);

    double vmin = 0.0, vmax = 0.0;
    bool first = true;
    for (double v : grid.values) {
        if (std::isnan(v)) continue;
        if (first || v < vmin) vmin = v;
        if (first || v > vmax) vmax = v;
        first = false;
    }
    const double span = (vmax > vmin) ? (vmax - vmin) : 1.0;

    const int nx = grid.spec.samples_x, ny = grid.spec.samples_y;
    const double cw = kCanvas / nx, ch = kCanvas / ny;
    out << "<g shape-rendering=\"crispEdges\">\n";
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const double v = grid.values[static_cast<std::size_t>(iy) * nx + ix];
            // y axis points up: row 0 (y = −Ly) at the bottom of the canvas
            out << "<rect x=\"" << px(ix * cw) << "\" y=\"" << px(kCanvas - (iy + 1) * ch)
                << "\" width=\"" << px(cw + 0.5) << "\" height=\"" << px(ch + 0.5)
                << "\" fill=\"" << ramp_color(std::isnan(v) ? 0.0 : (v - vmin) / span)
                << "\"/>\n";
        }
    out << "</g>\n";
    legend_bar(out, vmin, vmax);
    out << "</svg>\n";
    return out.str();
}

// Quiver plot of a 2-vector grid, subsampled to at most 33x33 arrows drawn as
// line elements with two-segment heads. Undefined samples are skipped. The
// legend shows the arrow length that corresponds to the maximum magnitude.
inline std::string field_to_svg_quiver(const FieldGrid& grid) {
    using namespace svg_detail;
    std::ostringstream out;
    open_svg(out, kLegend);

    const int nx = grid.spec.samples_x, ny = grid.spec.samples_y;
    const int stride_x = (nx + 32) / 33, stride_y = (ny + 32) / 33;

    double max_mag = 0.0;
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
        const double vx = grid.values[2 * i], vy = grid.values[2 * i + 1];
        if (std::isnan(vx) || std::isnan(vy)) continue;
        max_mag = std::max(max_mag, std::hypot(vx, vy));
    }
    const double legend_mag = max_mag;
    if (max_mag == 0.0) max_mag = 1.0;
    const double arrow = 0.9 * kCanvas / 33.0;

    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"none\" "
           "stroke=\"#333333\" stroke-width=\"1\"/>\n"
        << "<g stroke=\"#1f3b73\" stroke-width=\"1.2\" stroke-linecap=\"round\">\n";
    for (int iy = 0; iy < ny; iy += stride_y)
        for (int ix = 0; ix < nx; ix += stride_x) {
            const std::size_t i = static_cast<std::size_t>(iy) * nx + ix;
            const double vx = grid.values[2 * i], vy = grid.values[2 * i + 1];
            if (std::isnan(vx) || std::isnan(vy)) continue;
            const double mag = std::hypot(vx, vy);
            if (mag < 1e-6 * max_mag) continue;
            const double cx = (ix + 0.5) * kCanvas / nx;
            const double cy = kCanvas - (iy + 0.5) * kCanvas / ny;
            const double len = arrow * mag / max_mag;
            const double ux = vx / mag, uy = -vy / mag; // canvas y points down
            const double x1 = cx - 0.5 * len * ux, y1 = cy - 0.5 * len * uy;
            const double x2 = cx + 0.5 * len * ux, y2 = cy + 0.5 * len * uy;
            out << "<line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2)
                << "\" y2=\"" << px(y2) << "\"/>\n";
            // arrowhead: two short back-swept lines
            const double hx = -0.3 * len * ux, hy = -0.3 * len * uy;
            const double sx = 0.2 * len * -uy, sy = 0.2 * len * ux;
            out << "<line x1=\"" << px(x2) << "\" y1=\"" << px(y2) << "\" x2=\""
                << px(x2 + hx + sx) << "\" y2=\"" << px(y2 + hy + sy) << "\"/>\n";
            out << "<line x1=\"" << px(x2) << "\" y1=\"" << px(y2) << "\" x2=\""
                << px(x2 + hx - sx) << "\" y2=\"" << px(y2 + hy - sy) << "\"/>\n";
        }
    out << "</g>\n";
    // reference arrow for the largest sampled magnitude
    const double ly = kCanvas + 26.0;
    out << "<g stroke=\"#1f3b73\" stroke-width=\"1.2\" stroke-linecap=\"round\">\n"
        << "<line x1=\"100.00\" y1=\"" << px(ly) << "\" x2=\"" << px(100.0 + arrow) << "\" y2=\""
        << px(ly) << "\"/>\n"
        << "<line x1=\"" << px(100.0 + arrow) << "\" y1=\"" << px(ly) << "\" x2=\""
        << px(100.0 + 0.7 * arrow) << "\" y2=\"" << px(ly - 0.2 * arrow) << "\"/>\n"
        << "<line x1=\"" << px(100.0 + arrow) << "\" y1=\"" << px(ly) << "\" x2=\""
        << px(100.0 + 0.7 * arrow) << "\" y2=\"" << px(ly + 0.2 * arrow) << "\"/>\n"
        << "</g>\n";
    out << "<text x=\"" << px(110.0 + arrow) << "\" y=\"" << px(ly + 4.0)
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"start\">"
        << grid.label << " max = " << format_sci(legend_mag) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

inline std::string scan_to_svg(const ScanResult& scan) {
    FieldGrid g;
    g.spec = scan.spec;
    g.geom = WellGeometry{scan.half_a, scan.half_b};
    g.kind = FieldKind::Scalar;
    g.values = scan.shift_mu_b_units;
    g.label = "scan";
    return field_to_svg_heatmap(g);
}

} // namespace wavespin
