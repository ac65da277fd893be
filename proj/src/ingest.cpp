#include "trendirr/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"

namespace trendirr {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string token;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    token.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                token.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(token));
            token.clear();
        } else if (c != '\r') {
            token.push_back(c);
        }
    }
    fields.push_back(std::move(token));
    return fields;
}

std::string normalize(std::string s) {
    std::string out;
    for (const char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

struct ColumnMap {
    int unix_time = 0;
    int date = 1;
    int symbol = 2;
    int open = 3;
    int high = 4;
    int low = 5;
    int close = 6;
    int volume_crypto = 7;
    int volume_quote = 8;
};

// Case-insensitive name match; unresolved columns keep the positional default.
ColumnMap map_header(const std::vector<std::string>& header) {
    ColumnMap map;
    int volume_seen = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = normalize(header[i]);
        const int idx = static_cast<int>(i);
        if (name.rfind("unix", 0) == 0 || name == "time" || name == "timestamp")
            map.unix_time = idx;
        else if (name == "date")
            map.date = idx;
        else if (name == "symbol")
            map.symbol = idx;
        else if (name == "open")
            map.open = idx;
        else if (name == "high")
            map.high = idx;
        else if (name == "low")
            map.low = idx;
        else if (name == "close")
            map.close = idx;
        else if (name.rfind("volume", 0) == 0 || name.rfind("vol", 0) == 0) {
            (volume_seen == 0 ? map.volume_crypto : map.volume_quote) = idx;
            ++volume_seen;
        }
    }
    return map;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc{} && res.ptr == end && std::isfinite(out);
}

bool parse_unix(const std::string& s, std::int64_t& out) {
    double v = 0.0;
    if (!parse_double(s, v) || v <= 0.0) return false;
    std::int64_t t = static_cast<std::int64_t>(std::llround(v));
    if (t > 100'000'000'000LL) t /= 1000;  // millisecond exports
    out = t;
    return true;
}

const std::string& field(const std::vector<std::string>& row, int idx) {
    static const std::string empty;
    return idx >= 0 && static_cast<std::size_t>(idx) < row.size() ? row[idx] : empty;
}

}  // namespace

std::vector<OhlcvRecord> parse_csv(std::istream& in, IngestReport& report) {
    std::string line;
    std::size_t line_number = 0;

    // Header; a leading banner line (no commas) is skipped.
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        header = split_csv_line(line);
        if (header.size() >= 2) break;
        header.clear();
    }
    if (header.empty()) throw InvalidInput("parse_csv: no header row found");
    const ColumnMap cols = map_header(header);

    std::vector<OhlcvRecord> records;
    std::size_t malformed = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        const std::vector<std::string> row = split_csv_line(line);

        OhlcvRecord rec;
        std::string problem;
        if (!parse_unix(field(row, cols.unix_time), rec.unix_time))
            problem = "bad unix time";
        else if (!parse_double(field(row, cols.open), rec.open) || rec.open <= 0.0)
            problem = "bad open";
        else if (!parse_double(field(row, cols.high), rec.high) || rec.high <= 0.0)
            problem = "bad high";
        else if (!parse_double(field(row, cols.low), rec.low) || rec.low <= 0.0)
            problem = "bad low";
        else if (!parse_double(field(row, cols.close), rec.close) || rec.close <= 0.0)
            problem = "bad close";
        else if (rec.low > rec.high)
            problem = "low exceeds high";

        if (problem.empty()) {
            parse_double(field(row, cols.volume_crypto), rec.volume_crypto);
            parse_double(field(row, cols.volume_quote), rec.volume_quote);
            rec.date = field(row, cols.date);
            rec.symbol = field(row, cols.symbol);
            records.push_back(std::move(rec));
        } else {
            ++malformed;
            report.row_errors.push_back({line_number, problem});
        }
    }

    if (malformed > 0 && malformed * 2 > malformed + records.size())
        throw InvalidInput("parse_csv: more than 50% of rows are malformed (" +
                           std::to_string(malformed) + " of " +
                           std::to_string(malformed + records.size()) + ")");

    std::stable_sort(records.begin(), records.end(),
                     [](const OhlcvRecord& a, const OhlcvRecord& b) {
                         return a.unix_time < b.unix_time;
                     });
    std::size_t kept = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (kept > 0 && records[i].unix_time == records[kept - 1].unix_time) {
            ++report.duplicates_removed;
            continue;
        }
        if (kept != i) records[kept] = std::move(records[i]);
        ++kept;
    }
    records.resize(kept);
    report.rows_read = records.size();
    return records;
}

std::vector<OhlcvRecord> parse_csv_file(const std::string& path, IngestReport& report) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("parse_csv: cannot open " + path);
    return parse_csv(in, report);
}

LogReturnSeries build_log_returns_with_imputation(const std::vector<OhlcvRecord>& records,
                                                  std::uint64_t seed, IngestReport& report) {
    if (records.size() < 2)
        throw InsufficientData("build_log_returns_with_imputation: need at least 2 records");
    constexpr std::int64_t kPeriod = 60;

    // Observed open-price returns between consecutive records.
    std::vector<double> observed(records.size() - 1);
    for (std::size_t i = 0; i + 1 < records.size(); ++i)
        observed[i] = std::log(records[i + 1].open / records[i].open);

    double mean = 0.0;
    for (const double r : observed) mean += r;
    mean /= static_cast<double>(observed.size());
    double sd = 0.0;
    if (observed.size() > 1) {
        double ss = 0.0;
        for (const double r : observed) ss += (r - mean) * (r - mean);
        sd = std::sqrt(ss / static_cast<double>(observed.size() - 1));
    }

    LogReturnSeries out;
    out.start_timestamp = records.front().unix_time + kPeriod;
    out.period_seconds = kPeriod;
    Rng rng(seed);
    std::size_t gaps = 0;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const std::int64_t dt = records[i + 1].unix_time - records[i].unix_time;
        const std::int64_t k =
            std::max<std::int64_t>(1, std::llround(static_cast<double>(dt) / kPeriod));
        for (std::int64_t m = 1; m < k; ++m) {
            out.values.push_back(mean + sd * rng.normal());
            out.imputed_mask.push_back(1);
            ++gaps;
        }
        out.values.push_back(observed[i]);
        out.imputed_mask.push_back(0);
    }

    report.rows_read = records.size();
    report.gaps_found = gaps;
    report.imputed_fraction =
        static_cast<double>(gaps) / static_cast<double>(records.size() + gaps);
    report.period_start = records.front().unix_time;
    report.period_end = records.back().unix_time;
    return out;
}

}  // namespace trendirr
