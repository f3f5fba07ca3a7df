#pragma once

#include "probfrac/histogram.hpp"
#include "probfrac/image.hpp"
#include "probfrac/scales.hpp"

#include <string>
#include <vector>

namespace probfrac {

// Exponent of the generalized probability sum; -1 gives the classical
// information function.
inline constexpr double kDefaultAlpha = 0.2;

struct SurfacePoint {
    int x = 0;  // column
    int y = 0;  // row
    int z = 0;  // intensity
    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

// The image lifted to {(x, y, I(x, y))}, row-major. The counting kernels
// read the image directly; this is the explicit form of the same set.
std::vector<SurfacePoint> surface_points(const GrayImage& img);

// N_P = sum over m of m^alpha * p_m, with the numerator accumulated on
// integer counts so that alpha = 0 gives exactly 1.
double probability_sum(const ProbabilityHistogram& hist, double alpha);

struct CurvePoint {
    int delta = 0;
    double t = 0.0;   // ln delta
    double np = 0.0;  // N_P(delta)
    double u = 0.0;   // ln N_P(delta)
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct LogLogCurve {
    std::vector<CurvePoint> points;
    double alpha = kDefaultAlpha;
    Variant variant = Variant::grid;

    std::vector<double> t_values() const;
    std::vector<double> u_values() const;

    friend bool operator==(const LogLogCurve&, const LogLogCurve&) = default;
};

LogLogCurve loglog_curve(const GrayImage& img, const ScaleSet& scales, double alpha = kDefaultAlpha,
                         Variant variant = Variant::grid);

// Negated OLS slope of u against t. Throws FitError with fewer than two
// points or zero variance in t.
double fit_dimension(const LogLogCurve& curve);

// "delta,t,N_P,u" with 17 significant digits.
std::string curve_csv(const LogLogCurve& curve);

}  // namespace probfrac
