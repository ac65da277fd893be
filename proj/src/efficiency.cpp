#include "trendirr/efficiency.hpp"

#include <algorithm>
#include <cmath>

#include "trendirr/error.hpp"

namespace trendirr {

namespace {

constexpr int kMaxBlockLength = 24;

// Summed in ascending count order so that pattern relabelings (bit flips,
// reversals) give bit-identical entropies.
double entropy_of(const BlockEntropyTable& table) {
    std::vector<std::uint64_t> nonzero;
    nonzero.reserve(table.counts.size());
    for (const std::uint64_t c : table.counts)
        if (c > 0) nonzero.push_back(c);
    std::sort(nonzero.begin(), nonzero.end());
    const double total = static_cast<double>(table.total);
    double h = 0.0;
    for (const std::uint64_t c : nonzero) {
        const double f = static_cast<double>(c) / total;
        h -= f * std::log(f);
    }
    return h;
}

}  // namespace

BlockEntropyTable count_blocks(const BinarySeries& bits, int block_length) {
    if (block_length < 1 || block_length > kMaxBlockLength)
        throw InvalidInput("count_blocks: block length must be in [1, 24]");
    const std::size_t n = bits.bits.size();
    const std::size_t l = static_cast<std::size_t>(block_length);
    if (n < l)
        throw InsufficientData("count_blocks: series shorter than the block length");

    BlockEntropyTable table;
    table.block_length = block_length;
    table.counts.assign(std::size_t{1} << block_length, 0);
    const std::uint64_t mask = (std::uint64_t{1} << block_length) - 1;

    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t b = bits.bits[i];
        if (b > 1) throw InvalidInput("count_blocks: series contains a non-bit value");
        code = ((code << 1) | b) & mask;
        if (i + 1 >= l) ++table.counts[code];
    }
    table.total = n - l + 1;
    return table;
}

double block_entropy(const BinarySeries& bits, int block_length) {
    return entropy_of(count_blocks(bits, block_length));
}

InefficiencyResult inefficiency_index(const BinarySeries& bits, int block_length) {
    if (block_length < 1 || block_length > kMaxBlockLength - 1)
        throw InvalidInput("inefficiency_index: block length must be in [1, 23]");
    if (bits.bits.size() < static_cast<std::size_t>(block_length) + 1)
        throw InsufficientData("inefficiency_index: series shorter than block length + 1");

    InefficiencyResult out;
    out.block_length = block_length;
    out.n_blocks = bits.bits.size() - static_cast<std::size_t>(block_length);
    out.i_star = std::log(2.0) + block_entropy(bits, block_length) -
                 block_entropy(bits, block_length + 1);
    return out;
}

}  // namespace trendirr
