#include "probfrac/evaluate.hpp"

#include "parallel.hpp"
#include "probfrac/csv.hpp"
#include "probfrac/error.hpp"
#include "probfrac/kfold.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace probfrac {

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
    if (other.n_ != n_) throw ConfigError("confusion matrices of different sizes");
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
}

std::uint64_t ConfusionMatrix::total() const noexcept {
    return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::trace() const noexcept {
    std::uint64_t t = 0;
    for (int c = 0; c < n_; ++c) t += at(c, c);
    return t;
}

double ConfusionMatrix::accuracy() const noexcept {
    const auto n = total();
    return n == 0 ? 0.0 : static_cast<double>(trace()) / static_cast<double>(n);
}

namespace {

std::string prefixed(const Sample& sample, const std::exception& e) {
    return sample.path.string() + ": " + e.what();
}

}  // namespace

std::vector<DescriptorVector> extract_all(const DatasetManifest& manifest,
                                          const DescriptorConfig& cfg, int threads,
                                          const ProgressFn& progress) {
    cfg.validate();
    const std::size_t n = manifest.samples.size();
    std::vector<DescriptorVector> out(n);
    detail::ErrorSlots errors(n);
    std::size_t done = 0;
    const int n_threads = detail::resolve_threads(threads);

#pragma omp parallel for num_threads(n_threads) schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            const auto& sample = manifest.samples[i];
            // Sources are relative to the root so reports do not depend on where the dataset lives.
            const auto source = sample.path.lexically_relative(manifest.root).generic_string();
            out[i] = extract_descriptors(load_image(sample.path), cfg, source);
        } catch (const LoadError&) {
            errors.capture(i);
        } catch (const ScaleError& e) {
            errors.store(i, std::make_exception_ptr(ScaleError(prefixed(manifest.samples[i], e))));
        } catch (const ConfigError& e) {
            errors.store(i, std::make_exception_ptr(ConfigError(prefixed(manifest.samples[i], e))));
        } catch (...) {
            errors.capture(i);
        }
        if (progress) {
#pragma omp critical(probfrac_progress)
            progress(++done, n);
        }
    }
    errors.rethrow_first();
    return out;
}

FeatureMatrix to_features(std::span<const DescriptorVector> descriptors, std::span<const int> labels) {
    if (descriptors.size() != labels.size()) throw ConfigError("descriptor and label counts differ");
    FeatureMatrix x(descriptors.empty() ? 0 : descriptors.front().values.size());
    for (std::size_t i = 0; i < descriptors.size(); ++i) x.add_row(descriptors[i].values, labels[i]);
    return x;
}

PcaModel fold_pca(const FeatureMatrix& x, std::span<const int> folds, int fold,
                  std::size_t n_components, bool global) {
    if (global) return pca_fit(x, n_components);
    const auto train = train_indices(folds, fold);
    return pca_fit(x.subset(train), n_components);
}

namespace {

struct FoldResult {
    ConfusionMatrix confusion;
};

FoldResult run_fold(const FeatureMatrix& x, std::span<const int> folds, int fold, int n_classes,
                    std::size_t n_components, const EvalOptions& options) {
    const auto train = train_indices(folds, fold);
    const auto test = test_indices(folds, fold);
    const PcaModel pca = fold_pca(x, folds, fold, n_components, options.pca_global);
    const FeatureMatrix train_x = pca_transform(pca, x.subset(train));
    const FeatureMatrix test_x = pca_transform(pca, x.subset(test));
    const ClassifierModel model = train_classifier(train_x, n_classes, options.classifier, options.svm);

    FoldResult r{ConfusionMatrix(n_classes)};
    for (std::size_t i = 0; i < test_x.rows(); ++i) r.confusion.add(test_x.label(i), model.predict(test_x.row(i)));
    return r;
}

void summarize(EvalReport& report) {
    const auto k = static_cast<double>(report.fold_accuracies.size());
    double sum = 0.0;
    for (double a : report.fold_accuracies) sum += a;
    report.mean_accuracy = sum / k;
    double ss = 0.0;
    for (double a : report.fold_accuracies) ss += (a - report.mean_accuracy) * (a - report.mean_accuracy);
    report.std_accuracy = std::sqrt(ss / k);
}

}  // namespace

EvalReport evaluate_features(const FeatureMatrix& x, const EvalOptions& options,
                             std::span<const std::string> class_names) {
    if (x.rows() == 0) throw ConfigError("no samples to evaluate");
    const std::size_t n_components = options.n_components.value_or(x.dim());
    if (n_components < 1 || n_components > x.dim()) {
        throw ConfigError("PCA components " + std::to_string(n_components) + " outside [1, " +
                          std::to_string(x.dim()) + "]");
    }
    const int n_classes = std::max(count_classes(x.labels()), static_cast<int>(class_names.size()));

    EvalReport report;
    report.options = options;
    report.n_samples = x.rows();
    report.n_components = n_components;
    report.class_names.assign(class_names.begin(), class_names.end());
    for (int c = static_cast<int>(report.class_names.size()); c < n_classes; ++c) {
        report.class_names.push_back(std::to_string(c));
    }
    report.folds = kfold_split(x.labels(), options.k, options.seed, report.class_names);

    std::vector<FoldResult> results(static_cast<std::size_t>(options.k));
    detail::ErrorSlots errors(results.size());
    const int n_threads = detail::resolve_threads(options.threads);
#pragma omp parallel for num_threads(n_threads) schedule(dynamic)
    for (int f = 0; f < options.k; ++f) {
        try {
            results[static_cast<std::size_t>(f)] = run_fold(x, report.folds, f, n_classes, n_components, options);
        } catch (...) {
            errors.capture(static_cast<std::size_t>(f));
        }
    }
    errors.rethrow_first();

    report.confusion = ConfusionMatrix(n_classes);
    for (auto& r : results) {
        report.fold_accuracies.push_back(r.confusion.accuracy());
        report.confusion.merge(r.confusion);
        report.fold_confusions.push_back(std::move(r.confusion));
    }
    summarize(report);
    return report;
}

EvalReport evaluate(const DatasetManifest& manifest, const DescriptorConfig& cfg,
                    const EvalOptions& options, const ProgressFn& progress) {
    // Fold feasibility is checked before the expensive extraction.
    kfold_split(manifest.labels(), options.k, options.seed, manifest.classes);
    const auto descriptors = extract_all(manifest, cfg, options.threads, progress);
    const auto labels = manifest.labels();
    EvalReport report = evaluate_features(to_features(descriptors, labels), options, manifest.classes);
    report.descriptor = cfg;
    return report;
}

std::vector<SweepRow> sweep_components(const FeatureMatrix& x, const EvalOptions& options) {
    std::vector<SweepRow> rows;
    for (std::size_t n = 1; n <= x.dim(); ++n) {
        EvalOptions o = options;
        o.n_components = n;
        const auto r = evaluate_features(x, o);
        rows.push_back({n, r.mean_accuracy, r.std_accuracy});
    }
    return rows;
}

std::string folds_csv(const EvalReport& report) {
    std::string out = "fold,accuracy\n";
    for (std::size_t f = 0; f < report.fold_accuracies.size(); ++f) {
        out += std::to_string(f);
        out += ',';
        out += format_double(report.fold_accuracies[f]);
        out += '\n';
    }
    return out;
}

std::string assignments_csv(const EvalReport& report, std::span<const DescriptorVector> descriptors,
                            std::span<const int> labels) {
    if (descriptors.size() != report.folds.size() || labels.size() != report.folds.size()) {
        throw ConfigError("fold assignments cover " + std::to_string(report.folds.size()) + " samples, got " +
                          std::to_string(descriptors.size()) + " descriptors");
    }
    std::string out = "source,class,fold\n";
    for (std::size_t i = 0; i < descriptors.size(); ++i) {
        out += csv_field(descriptors[i].source);
        out += ',';
        out += csv_field(report.class_names.at(static_cast<std::size_t>(labels[i])));
        out += ',';
        out += std::to_string(report.folds[i]);
        out += '\n';
    }
    return out;
}

std::string confusion_csv(const EvalReport& report) {
    const auto& cm = report.confusion;
    std::string out = "expected\\predicted";
    for (int c = 0; c < cm.n_classes(); ++c) out += "," + csv_field(report.class_names[static_cast<std::size_t>(c)]);
    out += '\n';
    for (int e = 0; e < cm.n_classes(); ++e) {
        out += csv_field(report.class_names[static_cast<std::size_t>(e)]);
        for (int p = 0; p < cm.n_classes(); ++p) out += "," + std::to_string(cm.at(e, p));
        out += '\n';
    }
    return out;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = "n_components,mean_accuracy,std_accuracy\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n_components) + "," + format_double(r.mean_accuracy) + "," +
               format_double(r.std_accuracy) + "\n";
    }
    return out;
}

std::string summary_line(const EvalReport& report) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.6f \xC2\xB1 %.6f (%zu folds, %zu samples)", report.mean_accuracy,
                  report.std_accuracy, report.fold_accuracies.size(), report.n_samples);
    return buf;
}

}  // namespace probfrac
