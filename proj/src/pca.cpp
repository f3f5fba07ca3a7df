#include "probfrac/pca.hpp"

#include "probfrac/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace probfrac {

namespace {

void orient(std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    if (v[best] < 0.0) {
        for (auto& e : v) e = -e;
    }
}

}  // namespace

PcaModel pca_fit(const FeatureMatrix& x, std::size_t n_components) {
    const std::size_t n = x.rows();
    const std::size_t dim = x.dim();
    if (n < 2) throw ConfigError("PCA needs at least 2 rows, got " + std::to_string(n));
    if (n_components < 1 || n_components > dim) {
        throw ConfigError("PCA components " + std::to_string(n_components) + " outside [1, " +
                          std::to_string(dim) + "]");
    }

    Eigen::MatrixXd data(n, dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) data(i, j) = x.at(i, j);
    }
    const Eigen::VectorXd mean = data.colwise().mean();
    data.rowwise() -= mean.transpose();
    const Eigen::MatrixXd cov = (data.transpose() * data) / static_cast<double>(n);

    PcaModel model;
    model.mean.assign(mean.data(), mean.data() + dim);

    bool constant = true;
    for (std::size_t i = 1; i < n && constant; ++i) {
        constant = std::equal(x.row(i).begin(), x.row(i).end(), x.row(0).begin());
    }
    if (constant) {
        model.mean.assign(x.row(0).begin(), x.row(0).end());
        for (std::size_t k = 0; k < n_components; ++k) {
            std::vector<double> e(dim, 0.0);
            e[k] = 1.0;
            model.components.push_back(std::move(e));
            model.variances.push_back(0.0);
        }
        return model;
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw ConfigError("PCA eigendecomposition failed");
    // Eigen returns ascending eigenvalues.
    for (std::size_t k = 0; k < n_components; ++k) {
        const auto col = static_cast<Eigen::Index>(dim - 1 - k);
        std::vector<double> v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = solver.eigenvectors()(static_cast<Eigen::Index>(j), col);
        orient(v);
        model.components.push_back(std::move(v));
        model.variances.push_back(std::max(solver.eigenvalues()(col), 0.0));
    }
    return model;
}

FeatureMatrix pca_transform(const PcaModel& model, const FeatureMatrix& x) {
    if (x.dim() != model.input_dim()) {
        throw ConfigError("PCA model expects dimension " + std::to_string(model.input_dim()) +
                          ", got " + std::to_string(x.dim()));
    }
    FeatureMatrix out(model.output_dim());
    std::vector<double> projected(model.output_dim());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto r = x.row(i);
        for (std::size_t k = 0; k < model.output_dim(); ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < r.size(); ++j) {
                acc += (r[j] - model.mean[j]) * model.components[k][j];
            }
            projected[k] = acc;
        }
        out.add_row(projected, x.label(i));
    }
    return out;
}

}  // namespace probfrac
