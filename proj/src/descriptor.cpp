#include "probfrac/descriptor.hpp"

#include "probfrac/csv.hpp"
#include "probfrac/error.hpp"

#include <algorithm>
#include <cmath>

namespace probfrac {

void DescriptorConfig::validate() const {
    if (!(a0 >= kMinA0 && a0 <= kMaxA0)) {
        throw ConfigError("a0 = " + format_double(a0) + " outside [0.1, 5]");
    }
    if (t_keep < 1) throw ConfigError("t_keep must be at least 1, got " + std::to_string(t_keep));
    if (!std::isfinite(alpha)) throw ConfigError("alpha must be finite");
}

std::vector<double> multiscale_project(std::span<const double> t, std::span<const double> u,
                                       double a0) {
    if (!(a0 > 0.0)) throw ConfigError("smoothing width a0 must be positive, got " + format_double(a0));
    if (t.size() != u.size()) throw ConfigError("abscissa and value counts differ");
    if (t.size() < 2) throw ConfigError("smoothing needs at least 2 curve points");

    const double inv_two_var = 1.0 / (2.0 * a0 * a0);
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        // Accumulated as u_i + sum w_ij (u_j - u_i) / sum w_ij: a constant
        // curve is reproduced bit for bit.
        double weight_sum = 0.0;
        double acc = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const double d = t[j] - t[i];
            const double w = std::exp(-d * d * inv_two_var);
            weight_sum += w;
            acc += w * (u[j] - u[i]);
        }
        // weight_sum >= 1 (self weight). Rounding may leave the hull by an ulp.
        out[i] = std::clamp(u[i] + acc / weight_sum, *lo, *hi);
    }
    return out;
}

std::vector<double> multiscale_project(const LogLogCurve& curve, double a0) {
    const auto t = curve.t_values();
    const auto u = curve.u_values();
    return multiscale_project(t, u, a0);
}

std::vector<double> truncate(std::span<const double> smoothed, int t_keep) {
    if (t_keep < 1 || static_cast<std::size_t>(t_keep) > smoothed.size()) {
        throw ConfigError("t_keep = " + std::to_string(t_keep) + " exceeds curve length " +
                          std::to_string(smoothed.size()));
    }
    return {smoothed.begin(), smoothed.begin() + t_keep};
}

DescriptorVector extract_descriptors(const GrayImage& img, const DescriptorConfig& cfg,
                                     std::string source) {
    cfg.validate();
    const ScaleSet scales = cfg.scales.resolve(img.width(), img.height());
    if (static_cast<std::size_t>(cfg.t_keep) > scales.size()) {
        throw ConfigError("image " + std::to_string(img.width()) + "x" +
                          std::to_string(img.height()) + " yields " +
                          std::to_string(scales.size()) + " scales, fewer than t_keep = " +
                          std::to_string(cfg.t_keep));
    }
    const LogLogCurve curve = loglog_curve(img, scales, cfg.alpha, cfg.variant);
    DescriptorVector d;
    d.values = truncate(multiscale_project(curve, cfg.a0), cfg.t_keep);
    d.config = cfg;
    d.source = std::move(source);
    return d;
}

std::string descriptor_csv(std::span<const DescriptorVector> descriptors,
                           std::span<const std::string> labels) {
    std::size_t dim = descriptors.empty() ? 0 : descriptors.front().values.size();
    std::string out = "source,label";
    for (std::size_t k = 1; k <= dim; ++k) out += ",d" + std::to_string(k);
    out += '\n';
    for (std::size_t i = 0; i < descriptors.size(); ++i) {
        const auto& d = descriptors[i];
        if (d.values.size() != dim) throw ConfigError("descriptor lengths differ within a run");
        out += csv_field(d.source);
        out += ',';
        if (i < labels.size()) out += csv_field(labels[i]);
        for (double v : d.values) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace probfrac
