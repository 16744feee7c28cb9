#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavespin/constants.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/io/digest.hpp"
#include "wavespin/state.hpp"

namespace wavespin {

inline constexpr const char* kToolVersion = "1.0.0";

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw io_error("write failed: " + path.string());
}

struct EmittedFile {
    std::string name; // relative to the output directory
    std::size_t bytes = 0;
    std::string digest;
};

// Machine-readable record of one run: resolved configuration, derived state
// parameters, and digests of every emitted file. Written after all other
// outputs so its file list is complete.
struct RunManifest {
    std::string command;
    nlohmann::json resolved_config;
    nlohmann::json derived;
    double duration_seconds = 0.0;
    std::vector<EmittedFile> files;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["tool"] = "wavespin";
        j["version"] = kToolVersion;
        j["command"] = command;
        j["config"] = resolved_config;
        j["derived"] = derived;
        j["constants"] = kConstantsVintage;
        j["duration_seconds"] = duration_seconds;
        j["digest_algorithm"] = "fnv1a-64";
        j["files"] = nlohmann::json::array();
        for (const auto& f : files)
            j["files"].push_back({{"name", f.name}, {"bytes", f.bytes}, {"digest", f.digest}});
        return j;
    }
};

inline nlohmann::json derived_params_json(const DerivedStateParams& p,
                                          const PhysicalConstants& k = codata2018()) {
    nlohmann::json j;
    j["kx_per_m"] = p.kx;
    j["ky_per_m"] = p.ky;
    j["eta_x"] = p.eta_x;
    j["eta_y"] = p.eta_y;
    j["eta"] = p.eta;
    j["energy_joule"] = p.energy;
    j["kinetic_energy_ev"] = p.kinetic_energy(k) / k.e_charge;
    j["n_squared"] = p.n_squared;
    j["p_z"] = p.p_z;
    return j;
}

// Writes `content` under dir/name and records it in the manifest.
inline void emit(RunManifest& manifest, const std::filesystem::path& dir,
                 const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    manifest.files.push_back({name, content.size(), digest_hex(content)});
}

inline void write_manifest(const RunManifest& manifest, const std::filesystem::path& dir) {
    write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
}

// Re-reads every file listed in a manifest and checks size and digest.
inline bool verify_manifest(const std::filesystem::path& manifest_path, std::string* why = nullptr) {
    const auto j = nlohmann::json::parse(read_file(manifest_path.string()));
    const auto dir = manifest_path.parent_path();
    for (const auto& f : j.at("files")) {
        const std::string name = f.at("name").get<std::string>();
        std::string data;
        try {
            data = read_file((dir / name).string());
        } catch (const std::exception& e) {
            if (why) *why = e.what();
            return false;
        }
        if (data.size() != f.at("bytes").get<std::size_t>() ||
            digest_hex(data) != f.at("digest").get<std::string>()) {
            if (why) *why = "digest mismatch for " + name;
            return false;
        }
    }
    return true;
}

} // namespace wavespin
