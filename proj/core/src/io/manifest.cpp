#include "myxo/io/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "myxo/errors.hpp"
#include "myxo/io/checksum.hpp"

namespace myxo::io {

std::string RunManifest::config_at(const std::string& key) const {
    auto it = config.find(key);
    if (it == config.end()) throw RuntimeError("manifest config missing key '" + key + "'");
    return it->second;
}

namespace {

nlohmann::json files_to_json(const std::vector<FileRecord>& files) {
    auto arr = nlohmann::json::array();
    for (const auto& f : files) {
        arr.push_back({{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}});
    }
    return arr;
}

std::vector<FileRecord> files_from_json(const nlohmann::json& arr) {
    std::vector<FileRecord> out;
    for (const auto& f : arr) {
        out.push_back({f.at("path").get<std::string>(), f.at("sha256").get<std::string>(),
                       f.at("bytes").get<std::uint64_t>()});
    }
    return out;
}

} // namespace

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
    nlohmann::json j;
    j["artifact_version"] = m.artifact_version;
    j["subcommand"] = m.subcommand;
    j["seed"] = m.seed;
    j["config"] = m.config;
    j["inputs"] = files_to_json(m.inputs);
    j["outputs"] = files_to_json(m.outputs);
    j["duration_seconds"] = m.duration_seconds;

    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for writing");
    f << j.dump(2) << "\n";
    if (!f) throw RuntimeError("short write to " + path.string());
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw RuntimeError("cannot open manifest " + path.string());
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw RuntimeError("malformed manifest " + path.string() + ": " + e.what());
    }
    RunManifest m;
    try {
        m.artifact_version = j.at("artifact_version").get<std::string>();
        m.subcommand = j.at("subcommand").get<std::string>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.config = j.at("config").get<std::map<std::string, std::string>>();
        m.inputs = files_from_json(j.at("inputs"));
        m.outputs = files_from_json(j.at("outputs"));
        m.duration_seconds = j.value("duration_seconds", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw RuntimeError("manifest " + path.string() + " missing fields: " + e.what());
    }
    return m;
}

std::vector<FileRecord> record_files(const std::filesystem::path& base,
                                     const std::vector<std::string>& paths) {
    std::vector<FileRecord> out;
    out.reserve(paths.size());
    for (const auto& rel : paths) {
        const auto full = base / rel;
        FileRecord rec;
        rec.path = rel;
        rec.sha256 = sha256_file(full);
        rec.bytes = std::filesystem::file_size(full);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace myxo::io
