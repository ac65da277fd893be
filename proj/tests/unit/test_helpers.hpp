#pragma once

// Independent reference implementations used as test oracles. These are kept
// deliberately naive and separate from the library code paths they check.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

struct NaiveRuns {
    std::vector<long long> up, down, constant;
};

// Position-by-position scan: from each run start, extend while the strict
// comparison holds. Independent of the library's difference-sign encoding.
inline NaiveRuns naive_trend_runs(const std::vector<double>& s) {
    NaiveRuns out;
    std::size_t i = 0;
    while (i + 1 < s.size()) {
        std::size_t j = i;
        if (s[j + 1] > s[j]) {
            while (j + 1 < s.size() && s[j + 1] > s[j]) ++j;
            out.up.push_back(static_cast<long long>(j - i));
        } else if (s[j + 1] < s[j]) {
            while (j + 1 < s.size() && s[j + 1] < s[j]) ++j;
            out.down.push_back(static_cast<long long>(j - i));
        } else {
            while (j + 1 < s.size() && s[j + 1] == s[j]) ++j;
            out.constant.push_back(static_cast<long long>(j - i));
        }
        i = j;
    }
    return out;
}

// Smoothed KL between duration multisets via maps, mirroring the definition:
// add-alpha on both count vectors over the union support, renormalize.
inline double naive_kl_from_durations(const std::vector<long long>& up,
                                      const std::vector<long long>& down, double alpha) {
    std::map<long long, double> cu, cd;
    for (const long long d : up) cu[d] += 1.0;
    for (const long long d : down) cd[d] += 1.0;
    std::map<long long, int> support;
    for (const auto& [k, v] : cu) support[k] = 1;
    for (const auto& [k, v] : cd) support[k] = 1;

    const double s = static_cast<double>(support.size());
    const double np = static_cast<double>(up.size()) + alpha * s;
    const double nq = static_cast<double>(down.size()) + alpha * s;
    double sum = 0.0;
    for (const auto& [n, unused] : support) {
        const double pm = ((cu.count(n) ? cu[n] : 0.0) + alpha) / np;
        const double qm = ((cd.count(n) ? cd[n] : 0.0) + alpha) / nq;
        if (alpha == 0.0) {
            if (pm == 0.0) continue;
            if (qm == 0.0) throw std::runtime_error("naive kl undefined");
        }
        sum += pm * std::log(pm / qm);
    }
    return sum;
}

// Block entropy by collecting substrings into a map.
inline double naive_block_entropy(const std::vector<std::uint8_t>& bits, int l) {
    std::map<std::string, long long> counts;
    for (std::size_t i = 0; i + l <= bits.size(); ++i) {
        std::string key;
        for (int j = 0; j < l; ++j) key.push_back(bits[i + j] ? '1' : '0');
        ++counts[key];
    }
    const double total = static_cast<double>(bits.size() - l + 1);
    double h = 0.0;
    for (const auto& [pattern, c] : counts) {
        const double f = static_cast<double>(c) / total;
        h -= f * std::log(f);
    }
    return h;
}

// Regularized upper incomplete gamma Q(a, x): series for x < a + 1,
// continued fraction otherwise.
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-14) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    double b = x + 1.0 - a;
    double c = 1e300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-14) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

inline double chi2_sf(double chi2, double dof) { return gamma_q(dof / 2.0, chi2 / 2.0); }

}  // namespace testutil
