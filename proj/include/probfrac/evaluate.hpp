#pragma once

#include "probfrac/classifier.hpp"
#include "probfrac/dataset.hpp"
#include "probfrac/descriptor.hpp"
#include "probfrac/features.hpp"
#include "probfrac/pca.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace probfrac {

// cells[expected][predicted].
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;
    explicit ConfusionMatrix(int n_classes)
        : n_(n_classes), cells_(static_cast<std::size_t>(n_classes) * n_classes, 0) {}

    int n_classes() const noexcept { return n_; }
    std::uint64_t at(int expected, int predicted) const noexcept {
        return cells_[static_cast<std::size_t>(expected) * n_ + predicted];
    }
    void add(int expected, int predicted) noexcept {
        ++cells_[static_cast<std::size_t>(expected) * n_ + predicted];
    }
    void merge(const ConfusionMatrix& other);

    std::uint64_t total() const noexcept;
    std::uint64_t trace() const noexcept;
    double accuracy() const noexcept;

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> cells_;
};

struct EvalOptions {
    int k = 5;
    std::uint64_t seed = 42;
    ClassifierKind classifier = ClassifierKind::linear_svm;
    std::optional<std::size_t> n_components;  // empty: keep every dimension
    bool pca_global = false;                  // fit PCA on all rows instead of training rows
    int threads = 0;                          // 0: OpenMP default
    SvmOptions svm;
};

struct EvalReport {
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;  // population standard deviation over folds
    ConfusionMatrix confusion;
    std::vector<ConfusionMatrix> fold_confusions;
    std::vector<int> folds;
    std::size_t n_samples = 0;
    std::size_t n_components = 0;
    std::vector<std::string> class_names;
    EvalOptions options;
    DescriptorConfig descriptor;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Loads and describes every sample, in manifest order. The first failure
// (lowest sample index) is rethrown after all workers finish.
std::vector<DescriptorVector> extract_all(const DatasetManifest& manifest,
                                          const DescriptorConfig& cfg, int threads = 0,
                                          const ProgressFn& progress = {});

FeatureMatrix to_features(std::span<const DescriptorVector> descriptors, std::span<const int> labels);

// PCA used for one fold: fitted on the fold's training rows, or on all rows
// when options.pca_global is set.
PcaModel fold_pca(const FeatureMatrix& x, std::span<const int> folds, int fold,
                  std::size_t n_components, bool global);

// Stratified k-fold protocol on ready-made features.
EvalReport evaluate_features(const FeatureMatrix& x, const EvalOptions& options,
                             std::span<const std::string> class_names = {});

// Full pipeline on a dataset.
EvalReport evaluate(const DatasetManifest& manifest, const DescriptorConfig& cfg,
                    const EvalOptions& options, const ProgressFn& progress = {});

struct SweepRow {
    std::size_t n_components = 0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
};

// Accuracy for every PCA size 1..dim with the same folds.
std::vector<SweepRow> sweep_components(const FeatureMatrix& x, const EvalOptions& options);

std::string folds_csv(const EvalReport& report);
std::string confusion_csv(const EvalReport& report);
// "source,class,fold": the test fold of every sample, in manifest order.
std::string assignments_csv(const EvalReport& report, std::span<const DescriptorVector> descriptors,
                            std::span<const int> labels);
std::string sweep_csv(std::span<const SweepRow> rows);
// "<mean> ± <std> (K folds, N samples)".
std::string summary_line(const EvalReport& report);

}  // namespace probfrac
