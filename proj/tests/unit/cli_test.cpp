#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = TRENDIRR_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
    std::string stderr_text;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "trendirr_cli_out.txt";
    const fs::path err = fs::temp_directory_path() / "trendirr_cli_err.txt";
    const std::string cmd =
        kCli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.stdout_text = slurp(out);
    r.stderr_text = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("synth writes a walk csv with unit steps and a manifest") {
    const fs::path dir = fresh_dir("trendirr_test_synth");
    const RunResult r =
        run_cli("synth --process random_walk --p 0.6 --n 1000 --seed 1 --out-dir " + dir.string());
    REQUIRE(r.exit_code == 0);

    const std::vector<std::string> lines = lines_of(slurp_file(dir / "series.csv"));
    REQUIRE(lines.size() == 1002);  // digest comment + header + 1000 rows
    CHECK(lines[0].rfind("# manifest_digest=", 0) == 0);
    CHECK(lines[1] == "index,value");
    long long prev = 0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        const long long v = std::stoll(lines[i].substr(comma + 1));
        if (i > 2) CHECK(std::abs(v - prev) == 1);
        prev = v;
    }

    const json manifest = json::parse(slurp_file(dir / "manifest.json"));
    CHECK(manifest["command"] == "synth");
    CHECK(manifest["config"]["process"] == "random_walk");
}

TEST_CASE("synth ar2 and nar2 produce finite and nonnegative output") {
    const fs::path dir = fresh_dir("trendirr_test_synth2");
    REQUIRE(run_cli("synth --process ar2 --n 5000 --seed 2 --out-dir " + dir.string()).exit_code ==
            0);
    for (const std::string& line : lines_of(slurp_file(dir / "series.csv"))) {
        if (line[0] == '#' || line[0] == 'i') continue;
        CHECK(std::isfinite(std::stod(line.substr(line.find(',') + 1))));
    }

    const fs::path dir2 = fresh_dir("trendirr_test_synth3");
    REQUIRE(run_cli("synth --process nar2 --n 5000 --seed 3 --nar-time-mode scaled --out-dir " +
                    dir2.string())
                .exit_code == 0);
    for (const std::string& line : lines_of(slurp_file(dir2 / "series.csv"))) {
        if (line[0] == '#' || line[0] == 'i') continue;
        CHECK(std::stod(line.substr(line.find(',') + 1)) >= 0.0);
    }
}

TEST_CASE("analyze on a raw series emits windows.csv and summary.json") {
    const fs::path data_dir = fresh_dir("trendirr_test_analyze_in");
    REQUIRE(run_cli("synth --process ar2 --n 3000 --seed 4 --out-dir " + data_dir.string())
                .exit_code == 0);

    const fs::path out_dir = fresh_dir("trendirr_test_analyze_out");
    const std::string args = "analyze --input " + (data_dir / "series.csv").string() +
                             " --input-format series --window-minutes 1000 --step-minutes 1000"
                             " --surrogates 30 --seed 9 --out-dir " +
                             out_dir.string();
    const RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);

    const std::vector<std::string> lines = lines_of(slurp_file(out_dir / "windows.csv"));
    REQUIRE(lines.size() == 5);  // digest + header + 3 windows
    CHECK(lines[1] ==
          "window_start_unix,i_t,i_t_threshold95,i_t_significant,"
          "i_star,i_star_threshold95,i_star_significant");

    const json summary = json::parse(slurp_file(out_dir / "summary.json"));
    CHECK(summary["n_windows"] == 3);
    CHECK(summary["manifest_digest"].is_string());
    const std::string digest = summary["manifest_digest"];
    CHECK(lines[0] == "# manifest_digest=" + digest);
    CHECK(summary["pearson_r_irreversibility_inefficiency"].is_number());

    // Byte-identical rerun under the same manifest.
    const fs::path out_dir2 = fresh_dir("trendirr_test_analyze_out2");
    const std::string args2 = "analyze --input " + (data_dir / "series.csv").string() +
                              " --input-format series --window-minutes 1000 --step-minutes 1000"
                              " --surrogates 30 --seed 9 --out-dir " +
                              out_dir2.string();
    REQUIRE(run_cli(args2).exit_code == 0);
    CHECK(slurp_file(out_dir / "windows.csv") == slurp_file(out_dir2 / "windows.csv"));
}

TEST_CASE("analyze on an ohlcv fixture reports ingest statistics") {
    const fs::path data_dir = fresh_dir("trendirr_test_ohlcv");
    std::ostringstream csv;
    csv << "unix,date,symbol,open,high,low,close,Volume BTC,Volume USD\n";
    // 400 minutes with a 3-minute hole after minute 100
    for (int i = 0; i < 400; ++i) {
        if (i > 100 && i <= 103) continue;
        const std::int64_t t = 1600000000 + static_cast<std::int64_t>(i) * 60;
        const double open = 100.0 + (i % 7) - 0.3 * (i % 11);
        csv << t << ",2020-09-13,BTC/USD," << open << ',' << open + 1 << ',' << open - 1 << ','
            << open << ",1,1\n";
    }
    const fs::path file = data_dir / "btc.csv";
    {
        std::ofstream out(file);
        out << csv.str();
    }

    const fs::path out_dir = fresh_dir("trendirr_test_ohlcv_out");
    const RunResult r = run_cli("analyze --input " + file.string() +
                                " --window-minutes 200 --step-minutes 100 --surrogates 25" +
                                " --seed 3 --out-dir " + out_dir.string());
    REQUIRE(r.exit_code == 0);
    const json summary = json::parse(slurp_file(out_dir / "summary.json"));
    CHECK(summary["ingest"]["gaps_found"] == 3);
    CHECK(summary["ingest"]["rows_read"] == 397);
    CHECK(summary["ingest"]["imputed_fraction"].get<double>() ==
          doctest::Approx(3.0 / 400.0).epsilon(1e-12));
}

TEST_CASE("analyze on a missing file fails with a machine-readable record") {
    const fs::path out_dir = fresh_dir("trendirr_test_missing_out");
    const RunResult r =
        run_cli("analyze --input /no/such/file.csv --out-dir " + out_dir.string());
    CHECK(r.exit_code != 0);
    const json record = json::parse(r.stderr_text);
    CHECK(record["error"] == "invalid_input");
    CHECK(record["message"].get<std::string>().find("/no/such/file.csv") != std::string::npos);
}

TEST_CASE("validate walk suite reports the sweep with failures enumerated") {
    const fs::path out_dir = fresh_dir("trendirr_test_validate");
    const RunResult r =
        run_cli("validate --suite walk --seed 44 --out-dir " + out_dir.string());
    // The plug-in estimator matches the closed form at small drift and is
    // honestly reported as failing at p >= 0.7, so the suite exits nonzero.
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("random_walk closed form, p=0.5") != std::string::npos);
    CHECK(r.stdout_text.find("FAIL") != std::string::npos);
    CHECK(r.stdout_text.find("pass") != std::string::npos);

    const std::vector<std::string> lines = lines_of(slurp_file(out_dir / "validate.csv"));
    REQUIRE(lines.size() >= 6);  // digest + header + 5 sweep points
    CHECK(lines[1] == "name,observed,expected,tolerance,pass,informational,note");
}

TEST_CASE("synth rejects an unknown process") {
    const fs::path dir = fresh_dir("trendirr_test_badproc");
    const RunResult r = run_cli("synth --process brownian --n 100 --out-dir " + dir.string());
    CHECK(r.exit_code != 0);
    CHECK(json::parse(r.stderr_text)["error"] == "invalid_input");
}
