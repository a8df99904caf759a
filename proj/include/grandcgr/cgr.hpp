#ifndef GRANDCGR_CGR_HPP
#define GRANDCGR_CGR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grandcgr/dataset.hpp"

namespace grandcgr {

// 2^k x 2^k k-mer count grid, addressed (x, y) with origin bottom-left.
// Corner convention: A=(0,0), C=(0,1), G=(1,1), T=(1,0).
struct CgrGrid {
    int k = 0;
    int side = 0;
    std::vector<std::uint32_t> counts; // row-major by y: counts[y*side + x]
    std::uint64_t skipped = 0;         // windows containing a non-ACGT character

    std::uint32_t at(int x, int y) const {
        return counts[static_cast<std::size_t>(y) * side + x];
    }
    std::uint32_t& at(int x, int y) {
        return counts[static_cast<std::size_t>(y) * side + x];
    }
};

// Values in [0, 1]; max value is 1 unless the grid is all-zero.
struct NormalizedCgr {
    int k = 0;
    int side = 0;
    std::vector<float> values;

    float at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * side + x];
    }
};

struct PairedTensor {
    NormalizedCgr channel_a;
    NormalizedCgr channel_b;
    PairLabel label = PairLabel::positive;
};

// Cell-wise host minus pathogen; values in [-1, 1].
struct DiffGrid {
    int k = 0;
    int side = 0;
    std::vector<float> values;

    float at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * side + x];
    }
};

// Cell of a k-mer under the chaos-game midpoint recursion: the last
// character carries the most significant bit of each coordinate.
std::pair<int, int> kmer_cell(std::string_view kmer, int k);

std::string cell_to_kmer(int x, int y, int k);

// Each ACGT-only window increments its cell; other windows count as skipped.
CgrGrid encode(std::string_view seq, int k);

// Per-image max-division; the all-zero grid stays all-zero.
NormalizedCgr normalize(const CgrGrid& grid);

// Sum-normalization, offered for ablation.
NormalizedCgr normalize_by_sum(const CgrGrid& grid);

// Channel order is (gene_a, gene_b) as given; both channels must share k.
PairedTensor stack_pair(NormalizedCgr a, NormalizedCgr b, PairLabel label);

// Cell-wise sum of all per-sequence count grids, then max-normalized.
NormalizedCgr combine_genome(const std::vector<std::string>& sequences, int k);

DiffGrid diff_grids(const NormalizedCgr& host, const NormalizedCgr& pathogen);

} // namespace grandcgr

#endif
