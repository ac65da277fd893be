#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trendirr/series.hpp"

namespace trendirr {

/// One exchange candle row: Unix time, date, symbol, OHLC, two volumes.
struct OhlcvRecord {
    std::int64_t unix_time = 0;  // epoch seconds
    std::string date;
    std::string symbol;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume_crypto = 0.0;
    double volume_quote = 0.0;
};

struct RowError {
    std::size_t line_number = 0;
    std::string message;
};

struct IngestReport {
    std::size_t rows_read = 0;           // records kept after dedup
    std::size_t gaps_found = 0;          // missing minutes, each one imputed return
    std::size_t duplicates_removed = 0;  // rows dropped for a repeated timestamp
    std::vector<RowError> row_errors;    // malformed rows, ingestion continued
    double imputed_fraction = 0.0;       // gaps / (rows_read + gaps)
    std::int64_t period_start = 0;
    std::int64_t period_end = 0;
};

/// Parses an OHLCV CSV stream. Records come back sorted ascending by unix
/// time with duplicate timestamps collapsed keeping the first occurrence.
/// Header names are matched case-insensitively with a column-position
/// fallback; a leading banner line without commas is skipped. Malformed rows
/// are collected in the report with their line numbers; more than 50%
/// malformed is a hard error.
std::vector<OhlcvRecord> parse_csv(std::istream& in, IngestReport& report);
std::vector<OhlcvRecord> parse_csv_file(const std::string& path, IngestReport& report);

/// Open-price log returns on the minute grid covering the records' period.
/// Where consecutive records are k > 1 minutes apart, the k-1 missing returns
/// are drawn from Normal(m, s), m and s the mean and sample std of the
/// observed returns, and flagged in the imputed mask. Deterministic given
/// (records, seed); a different seed changes only masked positions.
LogReturnSeries build_log_returns_with_imputation(const std::vector<OhlcvRecord>& records,
                                                  std::uint64_t seed, IngestReport& report);

}  // namespace trendirr
