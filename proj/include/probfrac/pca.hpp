#pragma once

#include "probfrac/features.hpp"

#include <vector>

namespace probfrac {

// Principal axes of mean-centred data, ordered by decreasing variance
// (population covariance, divisor n). Each component's largest-magnitude
// entry is positive; on ties the earliest index wins.
struct PcaModel {
    std::vector<double> mean;
    std::vector<std::vector<double>> components;
    std::vector<double> variances;

    std::size_t input_dim() const noexcept { return mean.size(); }
    std::size_t output_dim() const noexcept { return components.size(); }
};

// Throws ConfigError with fewer than 2 rows or n_components outside
// [1, dim]. Constant data yields zero variances and the standard basis.
PcaModel pca_fit(const FeatureMatrix& x, std::size_t n_components);

// Rows (x - mean) projected on the components; labels carried over.
FeatureMatrix pca_transform(const PcaModel& model, const FeatureMatrix& x);

}  // namespace probfrac
