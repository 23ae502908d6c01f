#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace myxo::io {

struct FileRecord {
    std::string path; // relative to the manifest's directory
    std::string sha256;
    std::uint64_t bytes = 0;
};

/// Provenance record written alongside every run's outputs. The configuration
/// is stored fully resolved as flat string key/values, so replaying the
/// manifest needs nothing but the recorded inputs.
struct RunManifest {
    std::string artifact_version;
    std::string subcommand; // actin | graph | swarm
    std::uint64_t seed = 0;
    std::map<std::string, std::string> config;
    std::vector<FileRecord> inputs;  // files the run read (e.g. points csv)
    std::vector<FileRecord> outputs; // files the run wrote, checksummed
    double duration_seconds = 0.0;   // informational only

    std::string config_at(const std::string& key) const;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Throws RuntimeError when missing or malformed.
RunManifest read_manifest(const std::filesystem::path& path);

/// Checksums `paths` (relative to `base`) into FileRecords.
std::vector<FileRecord> record_files(const std::filesystem::path& base,
                                     const std::vector<std::string>& paths);

} // namespace myxo::io
