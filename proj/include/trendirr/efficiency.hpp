#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trendirr/series.hpp"

namespace trendirr {

/// Occurrence counts of the length-L bit patterns of a binary series,
/// collected with a stride-1 sliding window. Patterns are indexed by their
/// packed value, oldest bit highest.
struct BlockEntropyTable {
    int block_length = 0;
    std::vector<std::uint64_t> counts;  // size 2^block_length
    std::uint64_t total = 0;
};

/// Block-entropy inefficiency index ln(2) + H^L - H^{L+1}, nats.
struct InefficiencyResult {
    double i_star = 0.0;
    int block_length = 0;       // L; the reported index is I*^{L+1}
    std::size_t n_blocks = 0;   // (L+1)-blocks used
};

BlockEntropyTable count_blocks(const BinarySeries& bits, int block_length);

/// Plug-in joint entropy -sum (c/total) ln(c/total) of the length-l blocks.
double block_entropy(const BinarySeries& bits, int block_length);

/// i_star = ln(2) + H^L - H^{L+1}; zero iff the next sign is a fair coin
/// given the past L signs. Default L = 2 reports the index I*^3.
InefficiencyResult inefficiency_index(const BinarySeries& bits, int block_length = 2);

}  // namespace trendirr
