#include "probfrac/synth.hpp"

#include "probfrac/csv.hpp"
#include "probfrac/error.hpp"
#include "probfrac/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace fs = std::filesystem;

namespace probfrac {

std::string_view to_string(SynthKind kind) noexcept {
    switch (kind) {
        case SynthKind::blur_noise: return "blur-noise";
        case SynthKind::grating: return "grating";
        case SynthKind::checkerboard:
        default: return "checkerboard";
    }
}

SynthKind parse_synth_kind(std::string_view name) {
    if (name == "blur-noise") return SynthKind::blur_noise;
    if (name == "grating") return SynthKind::grating;
    if (name == "checkerboard") return SynthKind::checkerboard;
    throw ConfigError("unknown texture kind '" + std::string(name) +
                      "' (expected blur-noise, grating or checkerboard)");
}

namespace {

std::uint8_t to_gray(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

// Separable Gaussian blur with wrap-around borders.
std::vector<double> periodic_blur(const std::vector<double>& src, int size, double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        kernel[k + radius] = std::exp(-(k * k) / (2.0 * sigma * sigma));
        sum += kernel[k + radius];
    }
    for (auto& w : kernel) w /= sum;

    auto wrap = [size](int i) { return ((i % size) + size) % size; };
    std::vector<double> tmp(src.size());
    std::vector<double> out(src.size());
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) acc += kernel[k + radius] * src[y * size + wrap(x + k)];
            tmp[y * size + x] = acc;
        }
    }
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) acc += kernel[k + radius] * tmp[wrap(y + k) * size + x];
            out[y * size + x] = acc;
        }
    }
    return out;
}

}  // namespace

GrayImage synthesize(SynthKind kind, int size, std::uint64_t seed, std::uint64_t index,
                     const SynthParams& params) {
    if (size < 2) throw ConfigError("synthetic image size must be at least 2");
    const auto n = static_cast<std::size_t>(size) * size;
    Xoshiro256 rng(seed, index);
    std::vector<std::uint8_t> pixels(n);

    switch (kind) {
        case SynthKind::blur_noise: {
            if (!(params.sigma > 0.0)) throw ConfigError("blur sigma must be positive");
            std::vector<double> noise(n);
            for (auto& v : noise) v = rng.normal();
            const auto blurred = periodic_blur(noise, size, params.sigma);
            const auto [lo, hi] = std::minmax_element(blurred.begin(), blurred.end());
            const double span = *hi - *lo;
            for (std::size_t i = 0; i < n; ++i) {
                pixels[i] = span > 0.0 ? to_gray(255.0 * (blurred[i] - *lo) / span) : 128;
            }
            break;
        }
        case SynthKind::grating: {
            if (params.period < 2) throw ConfigError("grating period must be at least 2");
            const double theta = std::numbers::pi * rng.uniform();
            const double phase = 2.0 * std::numbers::pi * rng.uniform();
            const double fx = std::cos(theta) * 2.0 * std::numbers::pi / params.period;
            const double fy = std::sin(theta) * 2.0 * std::numbers::pi / params.period;
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    const double v = 128.0 + 80.0 * std::sin(fx * x + fy * y + phase) +
                                     params.noise * rng.normal();
                    pixels[static_cast<std::size_t>(y) * size + x] = to_gray(v);
                }
            }
            break;
        }
        case SynthKind::checkerboard: {
            if (params.cell < 1) throw ConfigError("checkerboard cell must be at least 1");
            const int ox = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(params.cell)));
            const int oy = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(params.cell)));
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    const bool dark = (((x + ox) / params.cell) + ((y + oy) / params.cell)) % 2 == 0;
                    const double v = (dark ? 80.0 : 176.0) + params.noise * rng.normal();
                    pixels[static_cast<std::size_t>(y) * size + x] = to_gray(v);
                }
            }
            break;
        }
    }
    return GrayImage(size, size, std::move(pixels));
}

std::vector<fs::path> write_synthetic(SynthKind kind, int count, int size, std::uint64_t seed,
                                      const fs::path& outdir, const SynthParams& params) {
    if (count < 1) throw ConfigError("synthetic image count must be at least 1");
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw LoadError(outdir.string() + ": cannot create directory: " + ec.message());

    std::vector<fs::path> written;
    for (int i = 0; i < count; ++i) {
        const GrayImage img = synthesize(kind, size, seed, static_cast<std::uint64_t>(i), params);
        char name[64];
        std::snprintf(name, sizeof(name), "%s_%03d.pgm", std::string(to_string(kind)).c_str(), i);
        const auto bytes = encode_pgm(img);
        const fs::path path = outdir / name;
        write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
        written.push_back(path);
    }
    return written;
}

}  // namespace probfrac
