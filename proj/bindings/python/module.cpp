#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trendirr/divergence.hpp"
#include "trendirr/efficiency.hpp"
#include "trendirr/error.hpp"
#include "trendirr/ingest.hpp"
#include "trendirr/series.hpp"
#include "trendirr/surrogate.hpp"
#include "trendirr/synth.hpp"
#include "trendirr/trend.hpp"
#include "trendirr/version.hpp"
#include "trendirr/window.hpp"

namespace py = pybind11;
using namespace trendirr;

namespace {

Statistic statistic_from_name(const std::string& name) {
    if (name == "trend_irreversibility") return Statistic::trend_irreversibility;
    if (name == "inefficiency") return Statistic::inefficiency;
    throw InvalidInput("unknown statistic " + name);
}

NarTimeMode nar_mode_from_name(const std::string& name) {
    if (name == "integer") return NarTimeMode::integer;
    if (name == "scaled") return NarTimeMode::scaled;
    throw InvalidInput("unknown nar time mode " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trend-pattern irreversibility and block-entropy inefficiency of time series";
    m.attr("__version__") = TRENDIRR_VERSION;

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_ValueError);
    py::register_exception<DivergenceUndefined>(m, "DivergenceUndefined", PyExc_ArithmeticError);

    py::class_<TrendDurations>(m, "TrendDurations")
        .def_readonly("up", &TrendDurations::up)
        .def_readonly("down", &TrendDurations::down)
        .def_readonly("constant", &TrendDurations::constant);

    py::class_<EmpiricalDistribution>(m, "EmpiricalDistribution")
        .def_readonly("support", &EmpiricalDistribution::support)
        .def_readonly("mass", &EmpiricalDistribution::mass)
        .def_readonly("n_samples", &EmpiricalDistribution::n_samples);

    py::class_<IrreversibilityResult>(m, "IrreversibilityResult")
        .def_readonly("i_t", &IrreversibilityResult::i_t)
        .def_readonly("n_up", &IrreversibilityResult::n_up)
        .def_readonly("n_down", &IrreversibilityResult::n_down)
        .def_readonly("smoothed", &IrreversibilityResult::smoothed);

    py::class_<InefficiencyResult>(m, "InefficiencyResult")
        .def_readonly("i_star", &InefficiencyResult::i_star)
        .def_readonly("block_length", &InefficiencyResult::block_length)
        .def_readonly("n_blocks", &InefficiencyResult::n_blocks);

    py::class_<SurrogateEnsembleResult>(m, "SurrogateEnsembleResult")
        .def_readonly("statistic_values", &SurrogateEnsembleResult::statistic_values)
        .def_readonly("threshold_95", &SurrogateEnsembleResult::threshold_95)
        .def_readonly("mean", &SurrogateEnsembleResult::mean)
        .def_readonly("n_surrogates", &SurrogateEnsembleResult::n_surrogates)
        .def_readonly("seed", &SurrogateEnsembleResult::seed);

    py::class_<WindowResult>(m, "WindowResult")
        .def_readonly("window_start", &WindowResult::window_start)
        .def_readonly("i_t", &WindowResult::i_t)
        .def_readonly("i_t_threshold", &WindowResult::i_t_threshold)
        .def_readonly("i_t_significant", &WindowResult::i_t_significant)
        .def_readonly("i_star", &WindowResult::i_star)
        .def_readonly("i_star_threshold", &WindowResult::i_star_threshold)
        .def_readonly("i_star_significant", &WindowResult::i_star_significant);

    m.def(
        "log_returns",
        [](const std::vector<double>& prices) {
            PriceSeries p;
            p.prices = prices;
            p.timestamps.resize(prices.size());
            for (std::size_t i = 0; i < prices.size(); ++i)
                p.timestamps[i] = static_cast<std::int64_t>(i) * 60;
            return log_returns(p).values;
        },
        py::arg("prices"), "Log returns ln(p[i+1]/p[i]) of a price sequence");

    m.def(
        "binarize",
        [](const std::vector<double>& values) {
            const BinarySeries b = binarize(std::span<const double>(values));
            return std::vector<int>(b.bits.begin(), b.bits.end());
        },
        py::arg("values"), "1 where the value is > 0, else 0");

    m.def(
        "extract_trend_durations",
        [](const std::vector<double>& series) {
            return extract_trend_durations(std::span<const double>(series));
        },
        py::arg("series"));

    m.def(
        "empirical_distribution",
        [](const std::vector<std::int64_t>& durations) {
            return empirical_distribution(std::span<const std::int64_t>(durations));
        },
        py::arg("durations"));

    m.def("kl_divergence", &kl_divergence, py::arg("p"), py::arg("q"),
          py::arg("smoothing") = kDefaultSmoothing);

    m.def(
        "trend_irreversibility",
        [](const std::vector<double>& series, double smoothing) {
            return trend_irreversibility(std::span<const double>(series), smoothing);
        },
        py::arg("series"), py::arg("smoothing") = kDefaultSmoothing);

    m.def("rw_kl_up_down", &rw_kl_up_down, py::arg("p"));
    m.def("rw_kl_down_up", &rw_kl_down_up, py::arg("p"));
    m.def("rw_entropy_production", &rw_entropy_production, py::arg("p"));

    m.def(
        "block_entropy",
        [](const std::vector<int>& bits, int l) {
            BinarySeries b;
            b.bits.assign(bits.begin(), bits.end());
            return block_entropy(b, l);
        },
        py::arg("bits"), py::arg("block_length"));

    m.def(
        "inefficiency_index",
        [](const std::vector<int>& bits, int l) {
            BinarySeries b;
            b.bits.assign(bits.begin(), bits.end());
            return inefficiency_index(b, l);
        },
        py::arg("bits"), py::arg("block_length") = 2);

    m.def(
        "shuffle_surrogate",
        [](const std::vector<double>& series, std::uint64_t seed) {
            return shuffle_surrogate(std::span<const double>(series), seed);
        },
        py::arg("series"), py::arg("seed"));

    m.def(
        "significance_test",
        [](const std::vector<double>& series, const std::string& statistic,
           std::size_t n_surrogates, double alpha, std::uint64_t seed, double smoothing,
           int block_l) {
            return significance_test(std::span<const double>(series),
                                     statistic_from_name(statistic), n_surrogates, alpha, seed,
                                     StatConfig{smoothing, block_l});
        },
        py::arg("series"), py::arg("statistic") = "trend_irreversibility",
        py::arg("n_surrogates") = 100, py::arg("alpha") = 0.05, py::arg("seed") = 0,
        py::arg("smoothing") = kDefaultSmoothing, py::arg("block_l") = 2);

    m.def("gen_random_walk", &gen_random_walk, py::arg("p"), py::arg("n"), py::arg("seed"));
    m.def("gen_ar2", &gen_ar2, py::arg("n"), py::arg("seed"));
    m.def(
        "gen_nar2",
        [](std::int64_t n, std::uint64_t seed, const std::string& time_mode) {
            return gen_nar2(n, seed, nar_mode_from_name(time_mode));
        },
        py::arg("n"), py::arg("seed"), py::arg("time_mode") = "integer");

    m.def(
        "run_windows",
        [](const std::vector<double>& values, std::int64_t window_minutes,
           std::int64_t step_minutes, double alpha, std::size_t n_surrogates, int block_l,
           double smoothing, std::uint64_t seed) {
            LogReturnSeries r;
            r.values = values;
            r.imputed_mask.assign(values.size(), 0);
            r.start_timestamp = 0;
            r.period_seconds = 60;
            WindowConfig cfg;
            cfg.window_minutes = window_minutes;
            cfg.step_minutes = step_minutes;
            cfg.alpha = alpha;
            cfg.n_surrogates = n_surrogates;
            cfg.block_l = block_l;
            cfg.smoothing = smoothing;
            cfg.seed = seed;
            return run_windows(r, cfg);
        },
        py::arg("values"), py::arg("window_minutes"), py::arg("step_minutes"),
        py::arg("alpha") = 0.05, py::arg("n_surrogates") = 100, py::arg("block_l") = 2,
        py::arg("smoothing") = kDefaultSmoothing, py::arg("seed") = 0);

    m.def(
        "pearson_correlation",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return pearson_correlation(std::span<const double>(a), std::span<const double>(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "ingest_csv",
        [](const std::string& path, std::uint64_t seed) {
            IngestReport report;
            const std::vector<OhlcvRecord> records = parse_csv_file(path, report);
            const LogReturnSeries r = build_log_returns_with_imputation(records, seed, report);
            py::dict rep;
            rep["rows_read"] = report.rows_read;
            rep["gaps_found"] = report.gaps_found;
            rep["duplicates_removed"] = report.duplicates_removed;
            rep["malformed_rows"] = report.row_errors.size();
            rep["imputed_fraction"] = report.imputed_fraction;
            rep["period_start"] = report.period_start;
            rep["period_end"] = report.period_end;
            return py::make_tuple(r.values,
                                  std::vector<int>(r.imputed_mask.begin(), r.imputed_mask.end()),
                                  rep);
        },
        py::arg("path"), py::arg("seed") = 0,
        "Parse a minute OHLCV csv and return (log_returns, imputed_mask, report)");
}
