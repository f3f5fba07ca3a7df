#pragma once

#include "probfrac/features.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace probfrac {

enum class ClassifierKind { nearest_mean, knn1, linear_svm };

std::string_view to_string(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier(std::string_view name);

// One-vs-rest L2-regularized hinge-loss SVM, solved in the dual by
// coordinate descent. The bias is an appended constant feature.
struct SvmOptions {
    double c = 1.0;
    int max_iterations = 10000;
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
};

struct NearestMeanModel {
    std::vector<std::vector<double>> centroids;
};

struct NearestNeighborModel {
    FeatureMatrix training;
};

struct LinearSvmModel {
    // z-score parameters from the training rows; zero spread maps to 1.
    std::vector<double> mean;
    std::vector<double> scale;
    // weights[c] has dim + 1 entries, the last one multiplies the bias feature.
    std::vector<std::vector<double>> weights;
    std::vector<int> iterations;

    std::vector<double> decision_values(std::span<const double> x) const;
};

class ClassifierModel {
public:
    using Model = std::variant<NearestMeanModel, NearestNeighborModel, LinearSvmModel>;

    explicit ClassifierModel(Model model, int n_classes)
        : model_(std::move(model)), n_classes_(n_classes) {}

    // Ties resolve to the lowest class index.
    int predict(std::span<const double> x) const;
    std::vector<int> predict(const FeatureMatrix& x) const;

    ClassifierKind kind() const noexcept;
    int n_classes() const noexcept { return n_classes_; }
    const Model& model() const noexcept { return model_; }

private:
    Model model_;
    int n_classes_ = 0;
};

// Throws ConfigError if any class in [0, n_classes) has no training rows.
ClassifierModel train_classifier(const FeatureMatrix& x, int n_classes, ClassifierKind kind,
                                 const SvmOptions& svm = {});

}  // namespace probfrac
