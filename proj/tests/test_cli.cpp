// End-to-end checks of the wavespin executable: exit codes, JSON and CSV
// outputs, config-file precedence, thread-count determinism, manifests.
// The binary path arrives via WAVESPIN_BIN (set by ctest).

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "wavespin/io/csv.hpp"
#include "wavespin/io/digest.hpp"
#include "wavespin/io/manifest.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using Catch::Approx;

namespace {

std::string binary() {
    const char* bin = std::getenv("WAVESPIN_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("wavespin_cli_out_" + std::to_string(++counter));
    const fs::path err = dir / ("wavespin_cli_err_" + std::to_string(counter));
    const std::string cmd = env + " \"" + binary() + "\" " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = wavespin::read_file(out.string());
    r.err = wavespin::read_file(err.string());
    fs::remove(out);
    fs::remove(err);
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("wavespin_cli_" + tag);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("info reports the derived parameters as JSON") {
    const auto dir = fresh_dir("info");
    const auto r = run_cli("info --state 2,2 --well 10e-9,10e-9 --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["eta"].get<double>() == Approx(1.7156604230e-4).epsilon(1e-8));
    CHECK(j["kinetic_energy_ev"].get<double>() == Approx(7.5206031970e-3).epsilon(1e-8));
    CHECK(j["n_squared"].get<double>() == Approx(4.0).epsilon(1e-7));

    const auto r11 = run_cli("info --state 1,1 --well 10e-9,10e-9 --out " + dir.string());
    CHECK(json::parse(r11.out)["kinetic_energy_ev"].get<double>() ==
          Approx(1.8801508096e-3).epsilon(1e-8));

    std::string why;
    CHECK(wavespin::verify_manifest(dir / "manifest.json", &why));
    fs::remove_all(dir);
}

TEST_CASE("validation failures exit 2 and name the field") {
    const auto bad_state = run_cli("info --state 0,1");
    CHECK(bad_state.exit_code == 2);
    CHECK(bad_state.err.find("nx") != std::string::npos);

    const auto bad_well = run_cli("info --well -1e-9,1e-9");
    CHECK(bad_well.exit_code == 2);
    CHECK(bad_well.err.find("Lx") != std::string::npos);

    const auto bad_spin = run_cli("info --spin sideways");
    CHECK(bad_spin.exit_code == 2);
}

TEST_CASE("unwritable output directory exits 3") {
    const auto r = run_cli("info --out /proc/wavespin_forbidden/x");
    CHECK(r.exit_code == 3);
}

TEST_CASE("field charge: central node in the CSV, manifest verifies") {
    const auto dir = fresh_dir("field");
    const auto r = run_cli("field charge --state 2,2 --grid 129,129 --out " + dir.string());
    REQUIRE(r.exit_code == 0);

    const auto parsed = wavespin::parse_csv(wavespin::read_file((dir / "charge.csv").string()));
    REQUIRE(parsed.rows.size() == 129u * 129u);
    const auto& center = parsed.rows[129u * 64u + 64u];
    CHECK(center[0] == 0.0);
    CHECK(center[1] == 0.0);
    CHECK(std::abs(center[2]) < 1e-25);

    std::string why;
    CHECK(wavespin::verify_manifest(dir / "manifest.json", &why));
    fs::remove_all(dir);
}

TEST_CASE("field outputs are byte-identical across worker counts") {
    const auto d1 = fresh_dir("threads1");
    const auto d4 = fresh_dir("threads4");
    const std::string args = "field current --state 2,2 --grid 65,65 --formats csv,svg --out ";
    REQUIRE(run_cli(args + d1.string(), "WAVESPIN_THREADS=1").exit_code == 0);
    REQUIRE(run_cli(args + d4.string(), "WAVESPIN_THREADS=4").exit_code == 0);
    CHECK(wavespin::read_file((d1 / "current.csv").string()) ==
          wavespin::read_file((d4 / "current.csv").string()));
    CHECK(wavespin::read_file((d1 / "current.svg").string()) ==
          wavespin::read_file((d4 / "current.svg").string()));
    fs::remove_all(d1);
    fs::remove_all(d4);
}

TEST_CASE("golden SVGs: byte regression against the first vetted render") {
    // vetted by decoding the emitted arrows: the four rings around the
    // quarter-well centers each accumulate one full counterclockwise turn
    const auto dir = fresh_dir("golden");
    REQUIRE(run_cli("field current --state 2,2 --grid 65,65 --formats svg --out " + dir.string())
                .exit_code == 0);
    CHECK(wavespin::digest_hex(wavespin::read_file((dir / "current.svg").string())) ==
          "05222e9e46c56e21");

    REQUIRE(run_cli("field charge --state 2,2 --grid 129,129 --formats svg --out " + dir.string())
                .exit_code == 0);
    CHECK(wavespin::digest_hex(wavespin::read_file((dir / "charge.svg").string())) ==
          "10cc091794b75a98");
    fs::remove_all(dir);
}

TEST_CASE("velocity CSV marks undefined cells as empty fields") {
    const auto dir = fresh_dir("vel");
    REQUIRE(run_cli("field velocity --state 2,2 --grid 65,65 --out " + dir.string()).exit_code == 0);
    const std::string csv = wavespin::read_file((dir / "velocity.csv").string());
    CHECK(csv.find(",,") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("zeeman: splitting JSON and the B = 0 edge case") {
    const auto dir = fresh_dir("zeeman");
    const auto r = run_cli("zeeman --state 2,2 --B 1 --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["splitting_mu_b_units"].get<double>() == Approx(2.0 * (1.0 - 1.47e-8)).epsilon(1e-9));
    CHECK(j["splitting_ev"].get<double>() == Approx(1.1576763442e-4).epsilon(1e-9));
    CHECK(j["shift_down_mu_b_units"].get<double>() < 0.0);

    std::string why;
    CHECK(wavespin::verify_manifest(dir / "manifest.json", &why));

    const auto r0 = run_cli("zeeman --state 2,2 --B 0 --out " + dir.string());
    CHECK(json::parse(r0.out)["splitting_ev"].get<double>() == 0.0);

    // finer structure: a higher state on the same well splits less
    const auto r44 = run_cli("zeeman --state 4,4 --B 1 --out " + dir.string());
    CHECK(json::parse(r44.out)["splitting_mu_b_units"].get<double>() <
          j["splitting_mu_b_units"].get<double>());
    fs::remove_all(dir);
}

TEST_CASE("scan: corner and center entries, determinism, manifest") {
    const auto d1 = fresh_dir("scan1");
    const auto d2 = fresh_dir("scan2");
    const std::string args = "scan --state 2,2 --grid 3,3 --B 1 --formats csv --out ";
    REQUIRE(run_cli(args + d1.string(), "WAVESPIN_THREADS=1").exit_code == 0);
    REQUIRE(run_cli(args + d2.string(), "WAVESPIN_THREADS=4").exit_code == 0);

    const std::string csv = wavespin::read_file((d1 / "scan.csv").string());
    CHECK(csv == wavespin::read_file((d2 / "scan.csv").string()));

    const auto parsed = wavespin::parse_csv(csv);
    REQUIRE(parsed.rows.size() == 9);
    CHECK(parsed.rows[0][2] == Approx(0.25).epsilon(1e-7));  // corner
    CHECK(parsed.rows[4][2] == Approx(-0.25).epsilon(1e-7)); // center
    CHECK(std::abs(parsed.rows[1][2]) < 1e-12);              // edge midline

    std::string why;
    CHECK(wavespin::verify_manifest(d1 / "manifest.json", &why));
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("scan rejects an oversized patch without --clip") {
    const auto dir = fresh_dir("scanclip");
    const std::string base =
        "scan --state 2,2 --grid 3,3 --patch-half 8e-9,8e-9 --out " + dir.string();
    CHECK(run_cli(base).exit_code == 2);
    CHECK(run_cli(base + " --clip").exit_code == 0);
    fs::remove_all(dir);
}

TEST_CASE("field momentum emits a finite vector grid") {
    const auto dir = fresh_dir("momentum");
    REQUIRE(run_cli("field momentum --state 1,1 --grid 33,33 --out " + dir.string()).exit_code == 0);
    const auto parsed = wavespin::parse_csv(wavespin::read_file((dir / "momentum.csv").string()));
    REQUIRE(parsed.rows.size() == 33u * 33u);
    for (const auto& row : parsed.rows) {
        CHECK(std::isfinite(row[2]));
        CHECK(std::isfinite(row[3]));
    }
    fs::remove_all(dir);
}

TEST_CASE("simpson rule is reachable through the config file") {
    const auto dir = fresh_dir("simpson");
    fs::create_directories(dir);
    const fs::path cfg = dir / "run.json";
    wavespin::write_file(cfg, R"({"quad": {"rule": "simpson", "order": 256}})");
    const auto r =
        run_cli("zeeman --state 2,2 --config " + cfg.string() + " --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["splitting_mu_b_units"].get<double>() == Approx(2.0).epsilon(1e-7));
    fs::remove_all(dir);
}

TEST_CASE("config file is honored and flags override it") {
    const auto dir = fresh_dir("config");
    fs::create_directories(dir);
    const fs::path cfg = dir / "run.json";
    wavespin::write_file(cfg, R"({"state": {"nx": 3, "ny": 1}, "well": {"Lx": 1e-8, "Ly": 1e-8}})");

    const auto from_cfg = run_cli("info --config " + cfg.string() + " --out " + dir.string());
    REQUIRE(from_cfg.exit_code == 0);
    CHECK(json::parse(from_cfg.out)["kinetic_energy_ev"].get<double>() ==
          Approx(9.4007539789e-3).epsilon(1e-8)); // (3,1) on the 10 nm well

    const auto overridden =
        run_cli("info --config " + cfg.string() + " --state 1,1 --out " + dir.string());
    CHECK(json::parse(overridden.out)["kinetic_energy_ev"].get<double>() ==
          Approx(1.8801508096e-3).epsilon(1e-8));
    fs::remove_all(dir);
}

TEST_CASE("check passes clean and fails under sabotage") {
    const auto dir = fresh_dir("check");
    const auto ok = run_cli("check --out " + dir.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto sab = run_cli("check --sabotage n-squared --out " + dir.string());
    CHECK(sab.exit_code == 1);
    CHECK(sab.out.find("FAIL") != std::string::npos);
    CHECK(sab.out.find("rho/e = 1") != std::string::npos);

    const auto js = run_cli("check --json --out " + dir.string());
    CHECK(js.exit_code == 0);
    const json arr = json::parse(js.out);
    CHECK(arr.is_array());
    CHECK(arr.size() > 20);
    for (const auto& entry : arr) CHECK(entry["pass"].get<bool>());
    fs::remove_all(dir);
}

TEST_CASE("unknown quantity and bad formats are validation errors") {
    CHECK(run_cli("field entropy").exit_code == 2);
    CHECK(run_cli("info --formats tiff").exit_code == 2);
}
