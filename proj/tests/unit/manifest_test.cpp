#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "trendirr/error.hpp"
#include "trendirr/manifest.hpp"

using namespace trendirr;

TEST_CASE("fnv1a64 matches known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("manifest digest is stable and sensitive to content") {
    RunManifest m;
    m.version = "0.1.0";
    m.command = "analyze";
    m.command_line = "trendirr analyze --input x.csv";
    m.config["alpha"] = "0.05";
    m.seed = 42;

    const std::string d1 = m.digest_hex();
    CHECK(d1.size() == 16);
    CHECK(m.digest_hex() == d1);

    RunManifest other = m;
    other.seed = 43;
    CHECK(other.digest_hex() != d1);
}

TEST_CASE("file digest reflects bytes") {
    const std::string path = "manifest_test_tmp.bin";
    {
        std::ofstream out(path, std::ios::binary);
        out << "foobar";
    }
    const InputDigest d = digest_file(path);
    CHECK(d.bytes == 6);
    CHECK(d.digest == "85944171f73967e8");
    std::remove(path.c_str());

    CHECK_THROWS_AS(digest_file("definitely-missing-file.csv"), InvalidInput);
}
