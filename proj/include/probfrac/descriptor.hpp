#pragma once

#include "probfrac/estimator.hpp"
#include "probfrac/histogram.hpp"
#include "probfrac/image.hpp"
#include "probfrac/scales.hpp"

#include <span>
#include <string>
#include <vector>

namespace probfrac {

struct DescriptorConfig {
    double alpha = kDefaultAlpha;
    double a0 = 0.1;  // Gaussian width in units of t = ln delta
    int t_keep = 8;   // leading smoothed points kept
    Variant variant = Variant::grid;
    ScalePolicy scales;

    static constexpr double kMinA0 = 0.1;
    static constexpr double kMaxA0 = 5.0;

    // Throws ConfigError if a0 is outside [0.1, 5] or t_keep < 1.
    void validate() const;
};

struct DescriptorVector {
    std::vector<double> values;
    DescriptorConfig config;
    std::string source;
};

// Gaussian smoothing of u at fixed width a0, evaluated at the curve's own
// abscissae. Row i uses weights exp(-(t_j - t_i)^2 / (2 a0^2)) renormalized
// over the available samples, so every output is a convex combination of
// the inputs. Throws ConfigError for a0 <= 0 or fewer than two samples.
std::vector<double> multiscale_project(std::span<const double> t, std::span<const double> u,
                                       double a0);
std::vector<double> multiscale_project(const LogLogCurve& curve, double a0);

// First t_keep values; throws ConfigError naming both sizes when t_keep
// exceeds the curve length.
std::vector<double> truncate(std::span<const double> smoothed, int t_keep);

// loglog_curve -> multiscale_project -> truncate.
DescriptorVector extract_descriptors(const GrayImage& img, const DescriptorConfig& cfg,
                                     std::string source = {});

// Header "source,label,d1..dk" then one row per descriptor; labels may be
// empty.
std::string descriptor_csv(std::span<const DescriptorVector> descriptors,
                           std::span<const std::string> labels = {});

}  // namespace probfrac
