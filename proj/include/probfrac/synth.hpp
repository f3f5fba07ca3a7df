#pragma once

#include "probfrac/image.hpp"

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace probfrac {

enum class SynthKind { blur_noise, grating, checkerboard };

std::string_view to_string(SynthKind kind) noexcept;
SynthKind parse_synth_kind(std::string_view name);

struct SynthParams {
    double sigma = 2.0;   // blur-noise: Gaussian blur width in pixels
    int period = 8;       // grating: wavelength in pixels
    int cell = 8;         // checkerboard: square side in pixels
    double noise = 20.0;  // grating/checkerboard: additive Gaussian noise, gray levels
};

// Image `index` of a seeded family:
//   blur-noise   - white noise blurred by a periodic Gaussian, stretched to [0, 255]
//   grating      - sinusoid of random orientation and phase plus noise
//   checkerboard - two-level board with random offset plus noise
GrayImage synthesize(SynthKind kind, int size, std::uint64_t seed, std::uint64_t index,
                     const SynthParams& params = {});

// Writes <outdir>/<kind>_<NNN>.pgm for index 0..count-1, creating outdir.
std::vector<std::filesystem::path> write_synthetic(SynthKind kind, int count, int size,
                                                   std::uint64_t seed,
                                                   const std::filesystem::path& outdir,
                                                   const SynthParams& params = {});

}  // namespace probfrac
