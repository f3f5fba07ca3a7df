#pragma once

#include "probfrac/image.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace probfrac {

// How cells are placed over the lifted surface {(x, y, I(x, y))}.
//   grid    - fixed lattice of delta-cubes; x/y bins start at 0 (trailing
//             partial strips dropped), z bins start at the image minimum.
//   gliding - one delta-cube centred on every surface point whose spatial
//             window fits in the image (classical Voss counting).
enum class Variant { grid, gliding };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view name);

// Occupancy distribution at one cell size: counts[m] is the number of
// cells holding exactly m surface points (m >= 1).
struct ProbabilityHistogram {
    int delta = 0;
    std::map<std::uint32_t, std::uint64_t> counts;
    std::uint64_t total_cells = 0;

    double probability(std::uint32_t m) const;
    std::uint32_t max_occupancy() const noexcept;
    // Sum of p_m, accumulated in ascending m.
    double probability_total() const;

    friend bool operator==(const ProbabilityHistogram&, const ProbabilityHistogram&) = default;
};

// Half-widths of a delta-wide window around a centre sample: the window
// spans [c - below, c + above], below + above + 1 == delta.
constexpr int window_below(int delta) noexcept { return (delta - 1) / 2; }
constexpr int window_above(int delta) noexcept { return delta / 2; }

// Throws ScaleError unless 2 <= delta <= floor(min(width, height) / 2).
void check_delta(const GrayImage& img, int delta);

// OpenMP-parallel kernel. Results are bit-identical for any thread count.
ProbabilityHistogram cell_histogram(const GrayImage& img, int delta, Variant variant);

namespace reference {

// Serial, map-based counterparts of the parallel kernels. Kept for tests
// and the benchmark.
ProbabilityHistogram cell_histogram(const GrayImage& img, int delta, Variant variant);

}  // namespace reference

}  // namespace probfrac
