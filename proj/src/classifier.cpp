#include "probfrac/classifier.hpp"

#include "probfrac/error.hpp"
#include "probfrac/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace probfrac {

std::string_view to_string(ClassifierKind kind) noexcept {
    switch (kind) {
        case ClassifierKind::nearest_mean: return "nearest-mean";
        case ClassifierKind::knn1: return "knn1";
        case ClassifierKind::linear_svm:
        default: return "linear-svm";
    }
}

ClassifierKind parse_classifier(std::string_view name) {
    if (name == "nearest-mean") return ClassifierKind::nearest_mean;
    if (name == "knn1") return ClassifierKind::knn1;
    if (name == "linear-svm") return ClassifierKind::linear_svm;
    throw ConfigError("unknown classifier '" + std::string(name) +
                      "' (expected nearest-mean, knn1 or linear-svm)");
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return d;
}

// Dual coordinate descent for  min_w 1/2 |w|^2 + C sum_i max(0, 1 - y_i w.x_i).
// Rows of z already carry the bias feature.
std::vector<double> train_binary_svm(const std::vector<std::vector<double>>& z,
                                     const std::vector<double>& y, const SvmOptions& opt,
                                     std::uint64_t stream, int& iterations) {
    const std::size_t n = z.size();
    const std::size_t dim = z.front().size();
    std::vector<double> w(dim, 0.0);
    std::vector<double> alpha(n, 0.0);
    std::vector<double> qii(n);
    for (std::size_t i = 0; i < n; ++i) {
        qii[i] = std::inner_product(z[i].begin(), z[i].end(), z[i].begin(), 0.0);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Xoshiro256 rng(opt.seed, stream);

    iterations = 0;
    while (iterations < opt.max_iterations) {
        ++iterations;
        rng.shuffle(std::span(order));
        double pg_max = -std::numeric_limits<double>::infinity();
        double pg_min = std::numeric_limits<double>::infinity();
        for (const std::size_t i : order) {
            const double g = y[i] * std::inner_product(w.begin(), w.end(), z[i].begin(), 0.0) - 1.0;
            double pg = g;
            if (alpha[i] <= 0.0) {
                pg = std::min(g, 0.0);
            } else if (alpha[i] >= opt.c) {
                pg = std::max(g, 0.0);
            }
            pg_max = std::max(pg_max, pg);
            pg_min = std::min(pg_min, pg);
            if (pg != 0.0 && qii[i] > 0.0) {
                const double old = alpha[i];
                alpha[i] = std::clamp(old - g / qii[i], 0.0, opt.c);
                const double step = (alpha[i] - old) * y[i];
                for (std::size_t j = 0; j < dim; ++j) w[j] += step * z[i][j];
            }
        }
        if (pg_max - pg_min < opt.tolerance) break;
    }
    return w;
}

LinearSvmModel train_svm(const FeatureMatrix& x, int n_classes, const SvmOptions& opt) {
    const std::size_t n = x.rows();
    const std::size_t dim = x.dim();
    LinearSvmModel model;
    model.mean.assign(dim, 0.0);
    model.scale.assign(dim, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) model.mean[j] += x.at(i, j);
    }
    for (auto& m : model.mean) m /= static_cast<double>(n);
    for (std::size_t j = 0; j < dim; ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) ss += (x.at(i, j) - model.mean[j]) * (x.at(i, j) - model.mean[j]);
        const double sd = std::sqrt(ss / static_cast<double>(n));
        model.scale[j] = sd > 0.0 ? sd : 1.0;
    }

    std::vector<std::vector<double>> z(n, std::vector<double>(dim + 1, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) z[i][j] = (x.at(i, j) - model.mean[j]) / model.scale[j];
    }

    model.weights.resize(static_cast<std::size_t>(n_classes));
    model.iterations.resize(static_cast<std::size_t>(n_classes));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n_classes; ++c) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x.label(i) == c ? 1.0 : -1.0;
        model.weights[static_cast<std::size_t>(c)] =
            train_binary_svm(z, y, opt, static_cast<std::uint64_t>(c),
                             model.iterations[static_cast<std::size_t>(c)]);
    }
    return model;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int argmin(std::span<const double> v) {
    return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

std::vector<double> LinearSvmModel::decision_values(std::span<const double> x) const {
    std::vector<double> out;
    out.reserve(weights.size());
    for (const auto& w : weights) {
        double acc = w.back();
        for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * (x[j] - mean[j]) / scale[j];
        out.push_back(acc);
    }
    return out;
}

int ClassifierModel::predict(std::span<const double> x) const {
    return std::visit(
        Overloaded{
            [&](const NearestMeanModel& m) {
                std::vector<double> d;
                for (const auto& c : m.centroids) d.push_back(squared_distance(x, c));
                return argmin(d);
            },
            [&](const NearestNeighborModel& m) {
                int best_label = 0;
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < m.training.rows(); ++i) {
                    const double d = squared_distance(x, m.training.row(i));
                    const int label = m.training.label(i);
                    if (d < best || (d == best && label < best_label)) {
                        best = d;
                        best_label = label;
                    }
                }
                return best_label;
            },
            [&](const LinearSvmModel& m) {
                const auto v = m.decision_values(x);
                return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
            },
        },
        model_);
}

std::vector<int> ClassifierModel::predict(const FeatureMatrix& x) const {
    std::vector<int> out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(predict(x.row(i)));
    return out;
}

ClassifierKind ClassifierModel::kind() const noexcept {
    switch (model_.index()) {
        case 0: return ClassifierKind::nearest_mean;
        case 1: return ClassifierKind::knn1;
        default: return ClassifierKind::linear_svm;
    }
}

ClassifierModel train_classifier(const FeatureMatrix& x, int n_classes, ClassifierKind kind,
                                 const SvmOptions& svm) {
    if (n_classes < 1) throw ConfigError("classifier needs at least one class");
    std::vector<std::size_t> per_class(static_cast<std::size_t>(n_classes), 0);
    for (const int label : x.labels()) {
        if (label < 0 || label >= n_classes) {
            throw ConfigError("label " + std::to_string(label) + " outside [0, " +
                              std::to_string(n_classes) + ")");
        }
        ++per_class[static_cast<std::size_t>(label)];
    }
    for (int c = 0; c < n_classes; ++c) {
        if (per_class[static_cast<std::size_t>(c)] == 0) {
            throw ConfigError("class " + std::to_string(c) + " has no training samples");
        }
    }

    switch (kind) {
        case ClassifierKind::nearest_mean: {
            NearestMeanModel m;
            m.centroids.assign(static_cast<std::size_t>(n_classes), std::vector<double>(x.dim(), 0.0));
            for (std::size_t i = 0; i < x.rows(); ++i) {
                auto& c = m.centroids[static_cast<std::size_t>(x.label(i))];
                for (std::size_t j = 0; j < x.dim(); ++j) c[j] += x.at(i, j);
            }
            for (int c = 0; c < n_classes; ++c) {
                for (auto& v : m.centroids[static_cast<std::size_t>(c)]) {
                    v /= static_cast<double>(per_class[static_cast<std::size_t>(c)]);
                }
            }
            return ClassifierModel(std::move(m), n_classes);
        }
        case ClassifierKind::knn1:
            return ClassifierModel(NearestNeighborModel{x}, n_classes);
        case ClassifierKind::linear_svm:
        default:
            return ClassifierModel(train_svm(x, n_classes, svm), n_classes);
    }
}

}  // namespace probfrac
