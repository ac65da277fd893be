#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trendirr {

struct InputDigest {
    std::string path;
    std::string digest;  // fnv1a64 of the file bytes, 16 hex chars
    std::uint64_t bytes = 0;
};

/// Everything a run depends on. Two runs with equal manifests produce
/// byte-identical outputs; no wall-clock state is recorded anywhere.
struct RunManifest {
    std::string tool = "trendirr";
    std::string version;
    std::string command;       // subcommand name
    std::string command_line;  // argv joined
    std::map<std::string, std::string> config;
    std::vector<InputDigest> inputs;
    std::uint64_t seed = 0;
    std::int64_t period_start = 0;  // analyzed data period (0 when not applicable)
    std::int64_t period_end = 0;

    std::string to_json(int indent = 2) const;
    /// fnv1a64 over the compact JSON form minus command_line, 16 hex chars.
    /// Runs with the same inputs, config, and seed share the digest.
    std::string digest_hex() const;
};

std::uint64_t fnv1a64(std::string_view bytes);
InputDigest digest_file(const std::string& path);

}  // namespace trendirr
