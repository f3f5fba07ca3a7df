#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace probfrac {

// Row-major sample-by-feature matrix with one class label per row.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    explicit FeatureMatrix(std::size_t dim) : dim_(dim) {}
    FeatureMatrix(std::size_t dim, std::vector<double> values, std::vector<int> labels);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rows() const noexcept { return labels_.size(); }

    std::span<const double> row(std::size_t i) const noexcept {
        return std::span(values_).subspan(i * dim_, dim_);
    }
    std::span<double> row(std::size_t i) noexcept {
        return std::span(values_).subspan(i * dim_, dim_);
    }
    double at(std::size_t i, std::size_t j) const noexcept { return values_[i * dim_ + j]; }

    const std::vector<int>& labels() const noexcept { return labels_; }
    int label(std::size_t i) const noexcept { return labels_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }

    void add_row(std::span<const double> values, int label);
    FeatureMatrix subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> values_;
    std::vector<int> labels_;
};

// Number of classes implied by the labels (max label + 1).
int count_classes(std::span<const int> labels);

}  // namespace probfrac
