#ifndef GRANDCGR_RENDER_HPP
#define GRANDCGR_RENDER_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "grandcgr/cgr.hpp"

namespace grandcgr {

// P5 PGM, 16-bit, darkness proportional to value (1 -> black, 0 -> white).
// File row 0 holds y = side-1 (top-down rendering).
void write_pgm(const NormalizedCgr& grid, const std::filesystem::path& path);

// CSV of values, rows top-down to match the PGM orientation.
void write_csv(const NormalizedCgr& grid, const std::filesystem::path& path);

// Writes base.csv (signed values) plus base.pos.pgm / base.neg.pgm.
void render_diff(const DiffGrid& diff, const std::filesystem::path& base);

struct PgmImage {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::vector<std::uint16_t> pixels; // file order: row 0 first
};

PgmImage read_pgm(const std::filesystem::path& path);

} // namespace grandcgr

#endif
