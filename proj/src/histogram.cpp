#include "probfrac/histogram.hpp"

#include "probfrac/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

namespace probfrac {

std::string_view to_string(Variant v) noexcept {
    return v == Variant::grid ? "grid" : "gliding";
}

Variant parse_variant(std::string_view name) {
    if (name == "grid") return Variant::grid;
    if (name == "gliding") return Variant::gliding;
    throw ConfigError("unknown counting variant '" + std::string(name) +
                      "' (expected grid or gliding)");
}

double ProbabilityHistogram::probability(std::uint32_t m) const {
    const auto it = counts.find(m);
    if (it == counts.end() || total_cells == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total_cells);
}

std::uint32_t ProbabilityHistogram::max_occupancy() const noexcept {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

double ProbabilityHistogram::probability_total() const {
    double sum = 0.0;
    for (const auto& [m, n] : counts) sum += static_cast<double>(n) / static_cast<double>(total_cells);
    return sum;
}

void check_delta(const GrayImage& img, int delta) {
    const int limit = std::min(img.width(), img.height()) / 2;
    if (delta < 2 || delta > limit) {
        throw ScaleError("cell size " + std::to_string(delta) + " outside [2, " +
                         std::to_string(limit) + "] for a " + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()) + " image");
    }
}

namespace {

using Tally = std::vector<std::uint64_t>;

ProbabilityHistogram from_tally(int delta, const Tally& tally) {
    ProbabilityHistogram h;
    h.delta = delta;
    for (std::size_t m = 1; m < tally.size(); ++m) {
        if (tally[m] == 0) continue;
        h.counts.emplace(static_cast<std::uint32_t>(m), tally[m]);
        h.total_cells += tally[m];
    }
    return h;
}

// One block row per iteration; inside a delta x delta column the points are
// binned by z, and each non-empty z bin is one occupied cell.
Tally grid_tally(const GrayImage& img, int delta) {
    const int blocks_x = img.width() / delta;
    const int blocks_y = img.height() / delta;
    const int zmin = img.min_value();
    const int zbins = (255 - zmin) / delta + 1;
    const std::size_t cap = static_cast<std::size_t>(delta) * delta;
    Tally total(cap + 1, 0);

#pragma omp parallel
    {
        Tally local(cap + 1, 0);
        std::vector<std::uint32_t> occupancy(zbins, 0);
#pragma omp for schedule(static)
        for (int by = 0; by < blocks_y; ++by) {
            for (int bx = 0; bx < blocks_x; ++bx) {
                const int x0 = bx * delta;
                const int y0 = by * delta;
                for (int y = y0; y < y0 + delta; ++y) {
                    const auto row = img.row(y);
                    for (int x = x0; x < x0 + delta; ++x) ++occupancy[(row[x] - zmin) / delta];
                }
                for (int y = y0; y < y0 + delta; ++y) {
                    const auto row = img.row(y);
                    for (int x = x0; x < x0 + delta; ++x) {
                        auto& n = occupancy[(row[x] - zmin) / delta];
                        if (n != 0) {
                            ++local[n];
                            n = 0;
                        }
                    }
                }
            }
        }
#pragma omp critical(probfrac_grid_tally)
        for (std::size_t m = 0; m <= cap; ++m) total[m] += local[m];
    }
    return total;
}

Tally gliding_tally(const GrayImage& img, int delta) {
    const int below = window_below(delta);
    const int above = window_above(delta);
    const int x_end = img.width() - above;
    const int y_end = img.height() - above;
    const std::size_t cap = static_cast<std::size_t>(delta) * delta;
    Tally total(cap + 1, 0);

#pragma omp parallel
    {
        Tally local(cap + 1, 0);
#pragma omp for schedule(static)
        for (int cy = below; cy < y_end; ++cy) {
            for (int cx = below; cx < x_end; ++cx) {
                const int z = img.at(cx, cy);
                const int z_lo = z - below;
                const int z_hi = z + above;
                std::uint32_t m = 0;
                for (int y = cy - below; y <= cy + above; ++y) {
                    const auto row = img.row(y);
                    for (int x = cx - below; x <= cx + above; ++x) {
                        const int v = row[x];
                        m += static_cast<std::uint32_t>(v >= z_lo && v <= z_hi);
                    }
                }
                ++local[m];
            }
        }
#pragma omp critical(probfrac_gliding_tally)
        for (std::size_t m = 0; m <= cap; ++m) total[m] += local[m];
    }
    return total;
}

}  // namespace

ProbabilityHistogram cell_histogram(const GrayImage& img, int delta, Variant variant) {
    check_delta(img, delta);
    const Tally tally = variant == Variant::grid ? grid_tally(img, delta) : gliding_tally(img, delta);
    return from_tally(delta, tally);
}

namespace reference {

ProbabilityHistogram cell_histogram(const GrayImage& img, int delta, Variant variant) {
    check_delta(img, delta);
    ProbabilityHistogram h;
    h.delta = delta;

    if (variant == Variant::grid) {
        const int x_limit = img.width() / delta * delta;
        const int y_limit = img.height() / delta * delta;
        const int zmin = img.min_value();
        std::map<std::tuple<int, int, int>, std::uint32_t> cells;
        for (int y = 0; y < y_limit; ++y) {
            for (int x = 0; x < x_limit; ++x) {
                ++cells[{x / delta, y / delta, (img.at(x, y) - zmin) / delta}];
            }
        }
        for (const auto& [cell, m] : cells) ++h.counts[m];
        h.total_cells = cells.size();
        return h;
    }

    const int below = window_below(delta);
    const int above = window_above(delta);
    for (int cy = below; cy + above < img.height(); ++cy) {
        for (int cx = below; cx + above < img.width(); ++cx) {
            const int z = img.at(cx, cy);
            std::uint32_t m = 0;
            for (int dy = -below; dy <= above; ++dy) {
                for (int dx = -below; dx <= above; ++dx) {
                    const int dz = img.at(cx + dx, cy + dy) - z;
                    if (dz >= -below && dz <= above) ++m;
                }
            }
            ++h.counts[m];
            ++h.total_cells;
        }
    }
    return h;
}

}  // namespace reference

}  // namespace probfrac
