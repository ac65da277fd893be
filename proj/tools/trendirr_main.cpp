// trendirr: trend-pattern irreversibility and block-entropy inefficiency of
// time series, with shuffle-surrogate significance testing.
//
// Subcommands:
//   analyze   sliding-window indices over a minute OHLCV csv (or raw series)
//   synth     synthetic benchmark processes (random_walk, ar2, nar2)
//   validate  oracle suite: closed forms and known reversible/irreversible cases

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trendirr/divergence.hpp"
#include "trendirr/error.hpp"
#include "trendirr/ingest.hpp"
#include "trendirr/manifest.hpp"
#include "trendirr/series.hpp"
#include "trendirr/synth.hpp"
#include "trendirr/validate.hpp"
#include "trendirr/version.hpp"
#include "trendirr/window.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace trendirr;

namespace {

std::string format_double(double v, const char* fmt = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) out.push_back(' ');
        out += argv[i];
    }
    return out;
}

void emit_error(const std::string& kind, const std::string& message, const std::string& path) {
    const json record = {{"error", kind}, {"message", message}, {"path", path}};
    std::cerr << record.dump() << "\n";
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) return "invalid_input";
    if (dynamic_cast<const InsufficientData*>(&e)) return "insufficient_data";
    if (dynamic_cast<const DivergenceUndefined*>(&e)) return "divergence_undefined";
    if (dynamic_cast<const GenerationError*>(&e)) return "generation_error";
    if (dynamic_cast<const UndefinedCorrelation*>(&e)) return "undefined_correlation";
    return "error";
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << content;
}

json ingest_report_json(const IngestReport& rep) {
    json errors = json::array();
    for (std::size_t i = 0; i < rep.row_errors.size() && i < 20; ++i)
        errors.push_back({{"line", rep.row_errors[i].line_number},
                          {"message", rep.row_errors[i].message}});
    return json{{"rows_read", rep.rows_read},
                {"gaps_found", rep.gaps_found},
                {"duplicates_removed", rep.duplicates_removed},
                {"malformed_rows", rep.row_errors.size()},
                {"first_row_errors", errors},
                {"imputed_fraction", rep.imputed_fraction},
                {"period_start", rep.period_start},
                {"period_end", rep.period_end}};
}

LogReturnSeries read_raw_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    LogReturnSeries r;
    r.start_timestamp = 0;
    r.period_seconds = 60;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t comma = line.find(',');
        const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
        try {
            r.values.push_back(std::stod(cell));
        } catch (const std::exception&) {
            // header or stray text row
            if (!r.values.empty())
                throw InvalidInput("unparsable series row: " + line);
        }
    }
    if (r.values.empty()) throw InsufficientData("no values in series file " + path);
    r.imputed_mask.assign(r.values.size(), 0);
    return r;
}

struct AnalyzeOptions {
    std::string input;
    std::string out_dir;
    std::string input_format = "ohlcv";
    WindowConfig window;
};

int run_analyze(const AnalyzeOptions& opt, const std::string& command_line) {
    RunManifest manifest;
    manifest.version = TRENDIRR_VERSION;
    manifest.command = "analyze";
    manifest.command_line = command_line;
    manifest.seed = opt.window.seed;
    manifest.config = {
        {"input", opt.input},
        {"input_format", opt.input_format},
        {"window_minutes", std::to_string(opt.window.window_minutes)},
        {"step_minutes", std::to_string(opt.window.step_minutes)},
        {"alpha", format_double(opt.window.alpha, "%.17g")},
        {"surrogates", std::to_string(opt.window.n_surrogates)},
        {"block_l", std::to_string(opt.window.block_l)},
        {"smoothing", format_double(opt.window.smoothing, "%.17g")},
        {"seed", std::to_string(opt.window.seed)},
    };
    manifest.inputs.push_back(digest_file(opt.input));

    IngestReport report;
    LogReturnSeries returns;
    if (opt.input_format == "ohlcv") {
        const std::vector<OhlcvRecord> records = parse_csv_file(opt.input, report);
        returns = build_log_returns_with_imputation(records, opt.window.seed, report);
        manifest.period_start = report.period_start;
        manifest.period_end = report.period_end;
    } else if (opt.input_format == "series") {
        returns = read_raw_series(opt.input);
        manifest.period_end =
            static_cast<std::int64_t>(returns.values.size()) * returns.period_seconds;
    } else {
        throw InvalidInput("unknown input format " + opt.input_format);
    }

    const std::vector<WindowResult> windows = run_windows(returns, opt.window);
    const std::string digest = manifest.digest_hex();

    fs::create_directories(opt.out_dir);
    std::ostringstream csv;
    csv << "# manifest_digest=" << digest << "\n";
    csv << "window_start_unix,i_t,i_t_threshold95,i_t_significant,"
           "i_star,i_star_threshold95,i_star_significant\n";
    for (const WindowResult& w : windows) {
        csv << w.window_start << ',' << format_double(w.i_t) << ','
            << format_double(w.i_t_threshold) << ',' << (w.i_t_significant ? 1 : 0) << ','
            << format_double(w.i_star) << ',' << format_double(w.i_star_threshold) << ','
            << (w.i_star_significant ? 1 : 0) << "\n";
    }
    write_text_file(fs::path(opt.out_dir) / "windows.csv", csv.str());

    std::vector<double> it_series, istar_series;
    std::size_t it_significant = 0, istar_significant = 0;
    for (const WindowResult& w : windows) {
        if (std::isfinite(w.i_t) && std::isfinite(w.i_star)) {
            it_series.push_back(w.i_t);
            istar_series.push_back(w.i_star);
        }
        it_significant += w.i_t_significant;
        istar_significant += w.i_star_significant;
    }
    json pearson;  // null unless defined
    if (it_series.size() >= 2) {
        try {
            pearson = pearson_correlation(it_series, istar_series);
        } catch (const UndefinedCorrelation&) {
        }
    }

    json summary = {
        {"manifest", json::parse(manifest.to_json())},
        {"manifest_digest", digest},
        {"n_windows", windows.size()},
        {"pearson_r_irreversibility_inefficiency", pearson},
        {"irreversibility_significant_fraction",
         windows.empty() ? 0.0 : static_cast<double>(it_significant) / windows.size()},
        {"inefficiency_significant_fraction",
         windows.empty() ? 0.0 : static_cast<double>(istar_significant) / windows.size()},
    };
    if (opt.input_format == "ohlcv") summary["ingest"] = ingest_report_json(report);
    write_text_file(fs::path(opt.out_dir) / "summary.json", summary.dump(2) + "\n");

    std::cout << "analyze: " << windows.size() << " windows -> " << opt.out_dir
              << " (manifest " << digest << ")\n";
    return 0;
}

struct SynthOptions {
    std::string process = "random_walk";
    double p = 0.6;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    std::string nar_time_mode = "integer";
    std::string out_dir;
};

int run_synth(const SynthOptions& opt, const std::string& command_line) {
    ProcessSpec spec;
    if (opt.process == "random_walk")
        spec.kind = ProcessKind::random_walk;
    else if (opt.process == "ar2")
        spec.kind = ProcessKind::ar2;
    else if (opt.process == "nar2")
        spec.kind = ProcessKind::nar2;
    else
        throw InvalidInput("unknown process " + opt.process);
    spec.p = opt.p;
    spec.length = opt.n;
    spec.seed = opt.seed;
    spec.nar_time_mode =
        opt.nar_time_mode == "scaled" ? NarTimeMode::scaled : NarTimeMode::integer;
    if (opt.nar_time_mode != "scaled" && opt.nar_time_mode != "integer")
        throw InvalidInput("unknown nar time mode " + opt.nar_time_mode);

    const std::vector<double> series = generate(spec);

    RunManifest manifest;
    manifest.version = TRENDIRR_VERSION;
    manifest.command = "synth";
    manifest.command_line = command_line;
    manifest.seed = opt.seed;
    manifest.period_end = spec.length;
    manifest.config = {
        {"process", opt.process},
        {"p", format_double(opt.p, "%.17g")},
        {"n", std::to_string(opt.n)},
        {"seed", std::to_string(opt.seed)},
        {"nar_time_mode", opt.nar_time_mode},
    };
    const std::string digest = manifest.digest_hex();

    fs::create_directories(opt.out_dir);
    std::ostringstream csv;
    csv << "# manifest_digest=" << digest << "\n";
    csv << "index,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (spec.kind == ProcessKind::random_walk)
            csv << i << ',' << static_cast<long long>(series[i]) << "\n";
        else
            csv << i << ',' << format_double(series[i], "%.17g") << "\n";
    }
    write_text_file(fs::path(opt.out_dir) / "series.csv", csv.str());
    write_text_file(fs::path(opt.out_dir) / "manifest.json",
                    json::parse(manifest.to_json()).dump(2) + "\n");

    std::cout << "synth: " << series.size() << " samples of " << opt.process << " -> "
              << opt.out_dir << " (manifest " << digest << ")\n";
    return 0;
}

struct ValidateOptions {
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::string out_dir;
};

int run_validate(const ValidateOptions& opt, const std::string& command_line) {
    std::vector<ValidateCheck> checks;
    if (opt.suite == "walk")
        checks = validate_random_walk(opt.seed);
    else if (opt.suite == "ar")
        checks = validate_ar(opt.seed);
    else if (opt.suite == "nar")
        checks = validate_nar(opt.seed);
    else if (opt.suite == "all")
        checks = validate_all(opt.seed);
    else
        throw InvalidInput("unknown suite " + opt.suite);

    std::size_t failures = 0;
    std::printf("%-44s %12s %12s %10s  %s\n", "check", "observed", "expected", "tolerance",
                "status");
    for (const ValidateCheck& c : checks) {
        const char* status =
            c.informational ? (c.pass ? "info-pass" : "info") : (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.informational) ++failures;
        std::printf("%-44s %12.6g %12.6g %10.4g  %s\n", c.name.c_str(), c.observed, c.expected,
                    c.tolerance, status);
        if (!c.pass && !c.note.empty()) std::printf("    note: %s\n", c.note.c_str());
    }
    std::printf("%zu gating check(s) failed\n", failures);

    if (!opt.out_dir.empty()) {
        RunManifest manifest;
        manifest.version = TRENDIRR_VERSION;
        manifest.command = "validate";
        manifest.command_line = command_line;
        manifest.seed = opt.seed;
        manifest.config = {{"suite", opt.suite}, {"seed", std::to_string(opt.seed)}};
        const std::string digest = manifest.digest_hex();

        fs::create_directories(opt.out_dir);
        std::ostringstream csv;
        csv << "# manifest_digest=" << digest << "\n";
        csv << "name,observed,expected,tolerance,pass,informational,note\n";
        for (const ValidateCheck& c : checks) {
            csv << '"' << c.name << "\"," << format_double(c.observed) << ','
                << format_double(c.expected) << ',' << format_double(c.tolerance) << ','
                << (c.pass ? 1 : 0) << ',' << (c.informational ? 1 : 0) << ",\"" << c.note
                << "\"\n";
        }
        write_text_file(fs::path(opt.out_dir) / "validate.csv", csv.str());
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trend-pattern irreversibility and market inefficiency indices"};
    app.set_version_flag("--version", TRENDIRR_VERSION);
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand("analyze", "sliding-window analysis of a csv file");
    analyze->add_option("--input", analyze_opt.input, "input csv path")->required();
    analyze->add_option("--out-dir", analyze_opt.out_dir, "output directory")->required();
    analyze->add_option("--input-format", analyze_opt.input_format,
                        "ohlcv (minute candles) or series (one value per row)");
    analyze->add_option("--window-minutes", analyze_opt.window.window_minutes);
    analyze->add_option("--step-minutes", analyze_opt.window.step_minutes);
    analyze->add_option("--alpha", analyze_opt.window.alpha);
    analyze->add_option("--surrogates", analyze_opt.window.n_surrogates);
    analyze->add_option("--block-l", analyze_opt.window.block_l);
    analyze->add_option("--smoothing", analyze_opt.window.smoothing);
    analyze->add_option("--seed", analyze_opt.window.seed);

    SynthOptions synth_opt;
    CLI::App* synth = app.add_subcommand("synth", "generate a benchmark process");
    synth->add_option("--process", synth_opt.process, "random_walk, ar2, or nar2");
    synth->add_option("--p", synth_opt.p, "walk right-step probability");
    synth->add_option("--n", synth_opt.n, "sample count")->required();
    synth->add_option("--seed", synth_opt.seed);
    synth->add_option("--nar-time-mode", synth_opt.nar_time_mode, "integer or scaled");
    synth->add_option("--out-dir", synth_opt.out_dir, "output directory")->required();

    ValidateOptions validate_opt;
    CLI::App* validate = app.add_subcommand("validate", "run the oracle suite");
    validate->add_option("--suite", validate_opt.suite, "all, walk, ar, or nar");
    validate->add_option("--seed", validate_opt.seed);
    validate->add_option("--out-dir", validate_opt.out_dir, "optional report directory");

    CLI11_PARSE(app, argc, argv);

    const std::string command_line = join_args(argc, argv);
    try {
        if (analyze->parsed()) return run_analyze(analyze_opt, command_line);
        if (synth->parsed()) return run_synth(synth_opt, command_line);
        if (validate->parsed()) return run_validate(validate_opt, command_line);
    } catch (const std::exception& e) {
        const std::string path = analyze->parsed() ? analyze_opt.input : "";
        emit_error(error_kind(e), e.what(), path);
        return 1;
    }
    return 0;
}
