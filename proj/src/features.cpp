#include "probfrac/features.hpp"

#include "probfrac/error.hpp"

#include <algorithm>
#include <string>

namespace probfrac {

FeatureMatrix::FeatureMatrix(std::size_t dim, std::vector<double> values, std::vector<int> labels)
    : dim_(dim), values_(std::move(values)), labels_(std::move(labels)) {
    if (values_.size() != dim_ * labels_.size()) {
        throw ConfigError("feature matrix holds " + std::to_string(values_.size()) +
                          " values, expected " + std::to_string(dim_ * labels_.size()));
    }
}

void FeatureMatrix::add_row(std::span<const double> values, int label) {
    if (values.size() != dim_) {
        throw ConfigError("row of length " + std::to_string(values.size()) +
                          " added to a matrix of dimension " + std::to_string(dim_));
    }
    if (label < 0) throw ConfigError("negative class label");
    values_.insert(values_.end(), values.begin(), values.end());
    labels_.push_back(label);
}

FeatureMatrix FeatureMatrix::subset(std::span<const std::size_t> indices) const {
    FeatureMatrix out(dim_);
    for (const std::size_t i : indices) out.add_row(row(i), labels_[i]);
    return out;
}

int count_classes(std::span<const int> labels) {
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace probfrac
