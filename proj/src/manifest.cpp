#include "trendirr/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "trendirr/error.hpp"

namespace trendirr {

namespace {

nlohmann::json to_json_value(const RunManifest& m) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const InputDigest& in : m.inputs)
        inputs.push_back({{"path", in.path}, {"digest", in.digest}, {"bytes", in.bytes}});
    return nlohmann::json{
        {"tool", m.tool},
        {"version", m.version},
        {"command", m.command},
        {"command_line", m.command_line},
        {"config", m.config},
        {"inputs", inputs},
        {"seed", m.seed},
        {"period_start", m.period_start},
        {"period_end", m.period_end},
    };
}

std::string to_hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

}  // namespace

std::string RunManifest::to_json(int indent) const { return to_json_value(*this).dump(indent); }

std::string RunManifest::digest_hex() const {
    // command_line is provenance only; the digest identifies the computation
    // (inputs, config, seed, version), so runs that differ only in argv
    // formatting or output location share it.
    nlohmann::json j = to_json_value(*this);
    j.erase("command_line");
    return to_hex16(fnv1a64(j.dump()));
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

InputDigest digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("digest_file: cannot open " + path);

    std::uint64_t h = 0xcbf29ce484222325ull;
    std::uint64_t bytes = 0;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
        bytes += static_cast<std::uint64_t>(got);
    }
    return {path, to_hex16(h), bytes};
}

}  // namespace trendirr
