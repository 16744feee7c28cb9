// wavespin: exact Dirac eigenstates of a 2D hard-wall well and what their
// circulating current does: densities, vortex maps, Zeeman shifts, patch scans.
//
// Subcommands: info | field <charge|current|momentum|velocity> | zeeman |
//              scan | check
// Exit codes:  0 success, 1 check failure, 2 validation, 3 I/O.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavespin/wavespin.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
    wavespin::StateIndex state{2, 2, wavespin::Spin::Up};
    wavespin::WellGeometry well{10e-9, 10e-9};
    wavespin::GridSpec grid{129, 129, true};
    bool grid_explicit = false;
    wavespin::QuadratureSpec quad{};
    double b_field = 1.0;
    wavespin::PotentialVariant potential = wavespin::PotentialVariant::Uniform;
    std::optional<std::pair<double, double>> patch_center;
    std::optional<std::pair<double, double>> patch_half;
    bool clip = false;
    std::string out_dir = "out";
    std::vector<std::string> formats = {"csv", "json"};
    bool json_output = false;
    std::string sabotage;
};

std::pair<double, double> parse_pair(const std::string& text, const std::string& field) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw wavespin::validation_error(field, "expected two comma-separated values");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw wavespin::validation_error(field, "cannot parse '" + text + "'");
    }
}

wavespin::Spin parse_spin(const std::string& s) {
    if (s == "up") return wavespin::Spin::Up;
    if (s == "down") return wavespin::Spin::Down;
    throw wavespin::validation_error("spin", "must be 'up' or 'down'");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    json j;
    try {
        j = json::parse(wavespin::read_file(path));
    } catch (const std::exception& e) {
        throw wavespin::validation_error("config", std::string("cannot load: ") + e.what());
    }
    if (j.contains("state")) {
        cfg.state.nx = j["state"].value("nx", cfg.state.nx);
        cfg.state.ny = j["state"].value("ny", cfg.state.ny);
        if (j["state"].contains("spin")) cfg.state.spin = parse_spin(j["state"]["spin"]);
    }
    if (j.contains("well")) {
        cfg.well.Lx = j["well"].value("Lx", cfg.well.Lx);
        cfg.well.Ly = j["well"].value("Ly", cfg.well.Ly);
    }
    if (j.contains("grid")) {
        cfg.grid.samples_x = j["grid"].value("samples_x", cfg.grid.samples_x);
        cfg.grid.samples_y = j["grid"].value("samples_y", cfg.grid.samples_y);
        cfg.grid.includes_boundary = j["grid"].value("includes_boundary", cfg.grid.includes_boundary);
        cfg.grid_explicit = true;
    }
    if (j.contains("quad")) {
        const std::string rule = j["quad"].value("rule", std::string("gauss"));
        if (rule == "gauss")
            cfg.quad.rule = wavespin::QuadratureRule::GaussLegendreTensor;
        else if (rule == "simpson")
            cfg.quad.rule = wavespin::QuadratureRule::CompositeSimpson;
        else
            throw wavespin::validation_error("quad.rule", "must be 'gauss' or 'simpson'");
        cfg.quad.order_or_panels = j["quad"].value("order", cfg.quad.order_or_panels);
        cfg.quad.split_at_patch_edges =
            j["quad"].value("split_at_patch_edges", cfg.quad.split_at_patch_edges);
    }
    if (j.contains("b_field")) cfg.b_field = j["b_field"].get<double>();
    if (j.contains("potential")) {
        const auto& p = j["potential"];
        const std::string variant = p.value("variant", std::string("uniform"));
        if (variant == "uniform")
            cfg.potential = wavespin::PotentialVariant::Uniform;
        else if (variant == "patch")
            cfg.potential = wavespin::PotentialVariant::Patch;
        else
            throw wavespin::validation_error("potential", "must be 'uniform' or 'patch'");
        if (p.contains("patch_center"))
            cfg.patch_center = {p["patch_center"][0].get<double>(), p["patch_center"][1].get<double>()};
        if (p.contains("patch_half"))
            cfg.patch_half = {p["patch_half"][0].get<double>(), p["patch_half"][1].get<double>()};
    }
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    if (j.contains("formats")) cfg.formats = j["formats"].get<std::vector<std::string>>();
}

bool wants(const RunConfig& cfg, const std::string& fmt) {
    for (const auto& f : cfg.formats)
        if (f == fmt) return true;
    return false;
}

wavespin::VectorPotentialSpec make_potential(const RunConfig& cfg) {
    if (cfg.potential == wavespin::PotentialVariant::Uniform)
        return wavespin::VectorPotentialSpec::uniform(cfg.b_field);
    const double a = cfg.patch_center ? cfg.patch_center->first : 0.0;
    const double b = cfg.patch_center ? cfg.patch_center->second : 0.0;
    const double wx = cfg.patch_half ? cfg.patch_half->first : -1.0;
    const double wy = cfg.patch_half ? cfg.patch_half->second : -1.0;
    return wavespin::VectorPotentialSpec::patch(cfg.b_field, a, b, cfg.well, wx, wy);
}

json config_json(const RunConfig& cfg) {
    json j;
    j["state"] = {{"nx", cfg.state.nx},
                  {"ny", cfg.state.ny},
                  {"spin", cfg.state.spin == wavespin::Spin::Up ? "up" : "down"}};
    j["well"] = {{"Lx", cfg.well.Lx}, {"Ly", cfg.well.Ly}};
    j["grid"] = {{"samples_x", cfg.grid.samples_x},
                 {"samples_y", cfg.grid.samples_y},
                 {"includes_boundary", cfg.grid.includes_boundary}};
    j["quad"] = {{"rule", cfg.quad.rule == wavespin::QuadratureRule::GaussLegendreTensor
                              ? "gauss"
                              : "simpson"},
                 {"order", cfg.quad.order_or_panels},
                 {"split_at_patch_edges", cfg.quad.split_at_patch_edges}};
    j["b_field"] = cfg.b_field;
    json pot;
    pot["variant"] = cfg.potential == wavespin::PotentialVariant::Uniform ? "uniform" : "patch";
    if (cfg.patch_center) pot["patch_center"] = {cfg.patch_center->first, cfg.patch_center->second};
    if (cfg.patch_half) pot["patch_half"] = {cfg.patch_half->first, cfg.patch_half->second};
    j["potential"] = pot;
    j["clip"] = cfg.clip;
    j["out"] = cfg.out_dir;
    j["formats"] = cfg.formats;
    return j;
}

struct Emitter {
    RunConfig cfg;
    wavespin::RunManifest manifest;
    fs::path dir;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Emitter(const RunConfig& c, const std::string& command,
            const wavespin::DerivedStateParams& p)
        : cfg(c), dir(c.out_dir) {
        manifest.command = command;
        manifest.resolved_config = config_json(c);
        manifest.derived = wavespin::derived_params_json(p);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw wavespin::io_error("cannot create output directory " + dir.string());
    }

    void emit(const std::string& name, const std::string& content) {
        wavespin::emit(manifest, dir, name, content);
    }

    void finish() {
        manifest.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        wavespin::write_manifest(manifest, dir);
    }
};

int cmd_info(const RunConfig& cfg) {
    const auto p = wavespin::derive_params(cfg.state, cfg.well);
    const auto& k = wavespin::codata2018();
    json j = wavespin::derived_params_json(p);
    j["n_squared_limit_deficit"] = 4.0 - p.n_squared;
    j["energy_above_rest_joule"] = p.kinetic_energy(k);
    std::cout << j.dump(2) << std::endl;

    Emitter em(cfg, "info", p);
    em.emit("info.json", j.dump(2) + "\n");
    em.finish();
    return 0;
}

int cmd_field(const RunConfig& cfg, const std::string& which) {
    wavespin::FieldQuantity q;
    if (which == "charge") q = wavespin::FieldQuantity::Charge;
    else if (which == "current") q = wavespin::FieldQuantity::Current;
    else if (which == "momentum") q = wavespin::FieldQuantity::Momentum;
    else if (which == "velocity") q = wavespin::FieldQuantity::Velocity;
    else throw wavespin::validation_error("field", "unknown quantity '" + which + "'");

    const auto p = wavespin::derive_params(cfg.state, cfg.well);
    const auto grid = wavespin::sample_field(p, cfg.state, cfg.well, cfg.grid, q);

    Emitter em(cfg, "field " + which, p);
    if (wants(cfg, "csv")) em.emit(which + ".csv", wavespin::field_to_csv(grid));
    if (wants(cfg, "svg"))
        em.emit(which + ".svg", grid.kind == wavespin::FieldKind::Scalar
                                    ? wavespin::field_to_svg_heatmap(grid)
                                    : wavespin::field_to_svg_quiver(grid));
    em.finish();
    return 0;
}

int cmd_zeeman(const RunConfig& cfg) {
    const auto p = wavespin::derive_params(cfg.state, cfg.well);
    const auto z = wavespin::zeeman_splitting(p, cfg.state, cfg.well, make_potential(cfg), cfg.quad);
    json j;
    j["b_field_tesla"] = cfg.b_field;
    j["shift_up_mu_b_units"] = z.up.shift_mu_b_units;
    j["shift_down_mu_b_units"] = z.down.shift_mu_b_units;
    j["shift_up_ev"] = z.up.shift_ev;
    j["shift_down_ev"] = z.down.shift_ev;
    j["splitting_mu_b_units"] = z.delta_mu_b_units;
    j["splitting_ev"] = z.delta_ev;
    j["quadrature_est_error"] = z.up.est_error;
    std::cout << j.dump(2) << std::endl;

    Emitter em(cfg, "zeeman", p);
    em.emit("zeeman.json", j.dump(2) + "\n");
    em.finish();
    return 0;
}

int cmd_scan(const RunConfig& cfg) {
    const auto p = wavespin::derive_params(cfg.state, cfg.well);
    wavespin::GridSpec scan_grid = cfg.grid_explicit ? cfg.grid : wavespin::GridSpec{17, 17, true};
    const auto scan = wavespin::scan_patch(p, cfg.state, cfg.well, cfg.b_field, scan_grid,
                                           cfg.quad, cfg.clip,
                                           cfg.patch_half ? cfg.patch_half->first : -1.0,
                                           cfg.patch_half ? cfg.patch_half->second : -1.0);
    Emitter em(cfg, "scan", p);
    if (wants(cfg, "csv")) em.emit("scan.csv", wavespin::scan_to_csv(scan));
    if (wants(cfg, "svg")) em.emit("scan.svg", wavespin::scan_to_svg(scan));
    em.finish();
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    wavespin::CheckOptions opts;
    opts.geom = cfg.well;
    if (!cfg.sabotage.empty()) {
        if (cfg.sabotage == "n-squared")
            opts.sabotage_n_squared = true;
        else
            throw wavespin::validation_error("sabotage", "unknown mode '" + cfg.sabotage + "'");
    }
    const auto results = wavespin::run_checks(opts);
    int failures = 0;
    json jr = json::array();
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        jr.push_back({{"name", r.name},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
        if (!cfg.json_output) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                      << "  measured=" << wavespin::format_sci(r.measured)
                      << " tol=" << wavespin::format_sci(r.tolerance) << "\n";
        }
    }
    if (cfg.json_output) std::cout << jr.dump(2) << std::endl;
    else
        std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
                  << std::endl;

    Emitter em(cfg, "check", wavespin::derive_params(cfg.state, cfg.well));
    em.emit("check.json", jr.dump(2) + "\n");
    em.finish();
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac electron wave-spin toolkit for 2D quantum wells"};
    app.require_subcommand(1);

    std::string state_s, spin_s, well_s, grid_s, pot_s, pcenter_s, phalf_s, formats_s, config_s, out_s;
    double b_field = 0.0;
    int quad_order = 0;
    bool clip = false, json_flag = false;
    std::string sabotage_s, field_which;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--state", state_s, "quantum numbers NX,NY");
        sub->add_option("--spin", spin_s, "up|down");
        sub->add_option("--well", well_s, "half-widths LX,LY in meters");
        sub->add_option("--grid", grid_s, "samples NX,NY");
        sub->add_option("--B", b_field, "magnetic field in tesla");
        sub->add_option("--potential", pot_s, "uniform|patch");
        sub->add_option("--patch-center", pcenter_s, "patch center A,B in meters");
        sub->add_option("--patch-half", phalf_s, "patch half-widths W,H in meters");
        sub->add_option("--quad", quad_order, "quadrature order per axis");
        sub->add_flag("--clip", clip, "integrate only the patch-well intersection");
        sub->add_option("--out", out_s, "output directory");
        sub->add_option("--formats", formats_s, "subset of csv,json,svg");
        sub->add_option("--config", config_s, "JSON config file (flags override it)");
        sub->add_flag("--json", json_flag, "machine-readable stdout");
    };

    CLI::App* info = app.add_subcommand("info", "derived per-state parameters");
    CLI::App* field = app.add_subcommand("field", "sample a field over the well");
    field->add_option("which", field_which, "charge|current|momentum|velocity")->required();
    CLI::App* zeeman = app.add_subcommand("zeeman", "first-order shifts and splitting");
    CLI::App* scan = app.add_subcommand("scan", "patch-position map of the energy shift");
    CLI::App* check = app.add_subcommand("check", "run the invariant suite");
    check->add_option("--sabotage", sabotage_s, "fault-injection hook (n-squared)");
    for (CLI::App* sub : {info, field, zeeman, scan, check}) add_common(sub);

    try {
        app.parse(argc, argv);

        RunConfig cfg;
        if (!config_s.empty()) apply_config_file(cfg, config_s);

        CLI::App* sub = app.get_subcommands().front();
        if (sub->count("--state")) {
            const auto [a, b] = parse_pair(state_s, "state");
            cfg.state.nx = static_cast<int>(a);
            cfg.state.ny = static_cast<int>(b);
        }
        if (sub->count("--spin")) cfg.state.spin = parse_spin(spin_s);
        if (sub->count("--well")) {
            const auto [a, b] = parse_pair(well_s, "well");
            cfg.well = {a, b};
        }
        if (sub->count("--grid")) {
            const auto [a, b] = parse_pair(grid_s, "grid");
            cfg.grid.samples_x = static_cast<int>(a);
            cfg.grid.samples_y = static_cast<int>(b);
            cfg.grid_explicit = true;
        }
        if (sub->count("--B")) cfg.b_field = b_field;
        if (sub->count("--potential")) {
            if (pot_s == "uniform") cfg.potential = wavespin::PotentialVariant::Uniform;
            else if (pot_s == "patch") cfg.potential = wavespin::PotentialVariant::Patch;
            else throw wavespin::validation_error("potential", "must be 'uniform' or 'patch'");
        }
        if (sub->count("--patch-center")) cfg.patch_center = parse_pair(pcenter_s, "patch-center");
        if (sub->count("--patch-half")) cfg.patch_half = parse_pair(phalf_s, "patch-half");
        if (sub->count("--quad")) cfg.quad.order_or_panels = quad_order;
        if (sub->count("--clip")) cfg.clip = clip;
        if (sub->count("--out")) cfg.out_dir = out_s;
        if (sub->count("--formats")) {
            cfg.formats.clear();
            std::size_t start = 0;
            while (start <= formats_s.size()) {
                const auto comma = formats_s.find(',', start);
                cfg.formats.push_back(formats_s.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (sub->count("--json")) cfg.json_output = json_flag;
        if (check->count("--sabotage")) cfg.sabotage = sabotage_s;

        cfg.state.validate();
        cfg.well.validate();
        cfg.grid.validate();
        cfg.quad.validate();
        if (cfg.formats.empty())
            throw wavespin::validation_error("formats", "at least one output format is required");
        for (const auto& f : cfg.formats)
            if (f != "csv" && f != "json" && f != "svg")
                throw wavespin::validation_error("formats", "unknown format '" + f + "'");

        if (sub == info) return cmd_info(cfg);
        if (sub == field) return cmd_field(cfg, field_which);
        if (sub == zeeman) return cmd_zeeman(cfg);
        if (sub == scan) return cmd_scan(cfg);
        return cmd_check(cfg);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wavespin::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wavespin::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wavespin::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wavespin::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
