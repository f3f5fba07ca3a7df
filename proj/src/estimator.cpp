#include "probfrac/estimator.hpp"

#include "probfrac/csv.hpp"
#include "probfrac/error.hpp"

#include <cmath>

namespace probfrac {

std::vector<SurfacePoint> surface_points(const GrayImage& img) {
    std::vector<SurfacePoint> pts;
    pts.reserve(img.size());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) pts.push_back({x, y, img.at(x, y)});
    }
    return pts;
}

double probability_sum(const ProbabilityHistogram& hist, double alpha) {
    double weighted = 0.0;
    for (const auto& [m, n] : hist.counts) {
        weighted += std::pow(static_cast<double>(m), alpha) * static_cast<double>(n);
    }
    return weighted / static_cast<double>(hist.total_cells);
}

std::vector<double> LogLogCurve::t_values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.t);
    return out;
}

std::vector<double> LogLogCurve::u_values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.u);
    return out;
}

LogLogCurve loglog_curve(const GrayImage& img, const ScaleSet& scales, double alpha,
                         Variant variant) {
    scales.check_fits(img.width(), img.height());
    LogLogCurve curve;
    curve.alpha = alpha;
    curve.variant = variant;
    curve.points.reserve(scales.size());
    for (const int delta : scales.deltas()) {
        const double np = probability_sum(cell_histogram(img, delta, variant), alpha);
        curve.points.push_back({delta, std::log(static_cast<double>(delta)), np, std::log(np)});
    }
    return curve;
}

double fit_dimension(const LogLogCurve& curve) {
    const std::size_t n = curve.points.size();
    if (n < 2) throw FitError("dimension fit needs at least 2 points, got " + std::to_string(n));
    double mean_t = 0.0;
    double mean_u = 0.0;
    for (const auto& p : curve.points) {
        mean_t += p.t;
        mean_u += p.u;
    }
    mean_t /= static_cast<double>(n);
    mean_u /= static_cast<double>(n);
    double stt = 0.0;
    double stu = 0.0;
    for (const auto& p : curve.points) {
        stt += (p.t - mean_t) * (p.t - mean_t);
        stu += (p.t - mean_t) * (p.u - mean_u);
    }
    if (stt == 0.0) throw FitError("dimension fit needs distinct scales");
    return 0.0 - stu / stt;
}

std::string curve_csv(const LogLogCurve& curve) {
    std::string out = "delta,t,N_P,u\n";
    for (const auto& p : curve.points) {
        out += std::to_string(p.delta);
        out += ',';
        out += format_double(p.t);
        out += ',';
        out += format_double(p.np);
        out += ',';
        out += format_double(p.u);
        out += '\n';
    }
    return out;
}

}  // namespace probfrac
