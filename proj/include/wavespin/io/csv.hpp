#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "wavespin/density.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/interaction.hpp"
#include "wavespin/io/format.hpp"

namespace wavespin {

inline std::vector<std::string> csv_value_columns(const FieldGrid& grid) {
    if (grid.label == "charge") return {"rho_over_e"};
    if (grid.label == "current") return {"jx_over_ec", "jy_over_ec"};
    if (grid.label == "momentum") return {"Gx_over_Ec", "Gy_over_Ec"};
    if (grid.label == "velocity") return {"vx_over_c", "vy_over_c"};
    return grid.kind == FieldKind::Scalar ? std::vector<std::string>{"value"}
                                          : std::vector<std::string>{"value_x", "value_y"};
}

// Row-major rows of x_m, y_m, value(s). Undefined samples (velocity below the
// density threshold) are emitted as empty fields.
inline std::string field_to_csv(const FieldGrid& grid) {
    std::ostringstream out;
    out << "x_m,y_m";
    for (const auto& c : csv_value_columns(grid)) out << ',' << c;
    out << '\n';
    const auto pts = grid_points(grid.geom, grid.spec);
    const int comps = grid.components();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << format_sci(pts[i].x) << ',' << format_sci(pts[i].y);
        for (int c = 0; c < comps; ++c) {
            const double v = grid.values[i * comps + c];
            out << ',';
            if (!std::isnan(v)) out << format_sci(v);
        }
        out << '\n';
    }
    return out.str();
}

inline std::string scan_to_csv(const ScanResult& scan) {
    std::ostringstream out;
    out << "a_m,b_m,shift_mu_b_units\n";
    for (int iy = 0; iy < scan.spec.samples_y; ++iy)
        for (int ix = 0; ix < scan.spec.samples_x; ++ix) {
            const std::size_t i =
                static_cast<std::size_t>(iy) * scan.spec.samples_x + ix;
            out << format_sci(scan.centers_a[ix]) << ',' << format_sci(scan.centers_b[iy])
                << ',' << format_sci(scan.shift_mu_b_units[i]) << '\n';
        }
    return out.str();
}

struct ParsedCsv {
    std::string header;
    std::vector<std::vector<double>> rows; // NaN for empty fields
};

inline ParsedCsv parse_csv(const std::string& text) {
    ParsedCsv parsed;
    std::istringstream in(text);
    if (!std::getline(in, parsed.header)) throw numerical_error("empty CSV");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string cell = line.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            row.push_back(cell.empty() ? std::numeric_limits<double>::quiet_NaN()
                                       : std::stod(cell));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        parsed.rows.push_back(std::move(row));
    }
    return parsed;
}

inline std::string emit_csv(const ParsedCsv& parsed) {
    std::ostringstream out;
    out << parsed.header << '\n';
    for (const auto& row : parsed.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (!std::isnan(row[c])) out << format_sci(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace wavespin
