#ifndef KPCA_LAB_KPCA_HPP
#define KPCA_LAB_KPCA_HPP

#include "common.hpp"
#include "eigensolver.hpp"
#include "kernels.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace kpca_lab {

/// Fitted kernel PCA.
///
/// `coefficients` holds one expansion vector a_k per column (N x M), scaled so
/// that lambda_k * N * a_k'a_k = 1, i.e. the implicit feature-space
/// eigenvector sum_i a_ki phi(x_i) has unit norm. `eigenvalues` are the
/// feature-space covariance eigenvalues lambda_k (raw Gram eigenvalue / N).
/// `train_gram` is the uncentered training kernel matrix.
struct KpcaModel {
    DataMatrix training;
    KernelSpec spec;
    Matrix coefficients;
    Vector eigenvalues;
    Matrix train_gram;

    Index samples() const { return training.rows(); }
    Index input_dim() const { return training.cols(); }
    Index components() const { return coefficients.cols(); }
};

struct PreimageConfig {
    int max_iterations = 1000;
    double tolerance = 1e-9;       // on |z_{t+1} - z_t|
    std::optional<Vector> initial; // defaults to the training mean
};

struct PreimageResult {
    Vector z;
    int iterations = 0;
    bool converged = false;
};

/// Relative cut-off below which a centered-Gram eigenvalue counts as zero.
inline constexpr double kpca_eigen_cutoff = 1e-10;

/// Kernel PCA on the centered Gram matrix. Components whose Gram eigenvalue is
/// not above kpca_eigen_cutoff * (largest) are dropped, so the returned model
/// may carry fewer than `m` components (zero for identical samples).
inline KpcaModel fit_kpca(const DataMatrix& x, const KernelSpec& spec, Index m) {
    validate(spec);
    require(x.rows() >= 2, "kernel PCA needs at least 2 samples, got " + std::to_string(x.rows()));
    require(m >= 1 && m <= x.rows(),
            "component count " + std::to_string(m) + " outside [1, " + std::to_string(x.rows()) + "]");
    if (!x.allFinite()) throw InputError("kernel PCA input contains non-finite values");

    KpcaModel model;
    model.training = x;
    model.spec = spec;
    model.train_gram = kernel_matrix(spec, x, x);
    const EigenDecomposition eig = sym_eig(center_gram(model.train_gram));

    const auto n = static_cast<double>(x.rows());
    const double top = eig.values(0);
    const double floor = 1e-12 * n * std::max(model.train_gram.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    Index kept = 0;
    if (top > floor)
        while (kept < m && eig.values(kept) > kpca_eigen_cutoff * top) ++kept;

    model.coefficients.resize(x.rows(), kept);
    model.eigenvalues.resize(kept);
    for (Index k = 0; k < kept; ++k) {
        const double raw = eig.values(k);
        model.coefficients.col(k) = eig.vectors.col(k) / std::sqrt(raw);
        model.eigenvalues(k) = raw / n;
    }
    return model;
}

/// Kernel principal components of each query row (T x M).
inline Matrix kpca_transform(const KpcaModel& model, const DataMatrix& queries) {
    require(queries.cols() == model.input_dim(), "kpca_transform: expected " + std::to_string(model.input_dim()) +
                                                     " features, got " + std::to_string(queries.cols()));
    const Matrix k_test = kernel_matrix(model.spec, queries, model.training);
    return center_cross(k_test, model.train_gram) * model.coefficients;
}

/// Expansion weights of the projected feature vector over the training images,
/// gamma_i = sum_k y_k a_ki, shifted by (1/N - mean(gamma)) to put back the
/// feature-space mean removed by centering. The weights always sum to 1.
template <typename Derived>
Vector preimage_weights(const KpcaModel& model, const Eigen::MatrixBase<Derived>& y) {
    require(y.size() == model.components(), "pre-image: expected " + std::to_string(model.components()) +
                                                " features, got " + std::to_string(y.size()));
    const Vector gamma = model.coefficients * y.derived().reshaped();
    const auto n = static_cast<double>(model.samples());
    return gamma.array() - gamma.mean() + 1.0 / n;
}

/// Gaussian pre-image by fixed-point iteration
///   z <- sum_i w_i x_i / sum_i w_i,  w_i = gamma_i exp(-|z - x_i|^2 / 2 sigma^2)
/// Throws DivergenceError when |sum_i w_i| drops below 1e-300.
template <typename Derived>
PreimageResult kpca_preimage(const KpcaModel& model, const Eigen::MatrixBase<Derived>& y,
                             const PreimageConfig& cfg = {}) {
    const auto* gaussian = std::get_if<GaussianKernel>(&model.spec);
    if (!gaussian)
        throw UnsupportedKernelError("pre-image reconstruction needs a gaussian kernel, model uses " +
                                     describe(model.spec));
    require(cfg.max_iterations >= 1, "max_iterations must be >= 1");
    require(cfg.tolerance > 0.0, "tolerance must be > 0");

    const Vector weights = preimage_weights(model, y);
    const Matrix xt = model.training.transpose(); // samples as columns
    const Index n = model.samples();

    PreimageResult result;
    if (cfg.initial) {
        require(cfg.initial->size() == model.input_dim(), "pre-image initial guess has wrong dimension");
        result.z = *cfg.initial;
    } else {
        result.z = column_means(model.training);
    }

    Vector next(model.input_dim());
    for (int t = 1; t <= cfg.max_iterations; ++t) {
        double denom = 0.0;
        next.setZero();
        for (Index i = 0; i < n; ++i) {
            const double w =
                weights(i) * detail::gaussian_from_sqdist(detail::squared_distance(result.z, xt.col(i)), gaussian->sigma);
            denom += w;
            next += w * xt.col(i);
        }
        if (!(std::abs(denom) >= 1e-300))
            throw DivergenceError("pre-image iteration " + std::to_string(t) + ": weight sum " + std::to_string(denom) +
                                      " underflowed",
                                  t, result.z);
        next /= denom;
        if (!next.allFinite())
            throw DivergenceError("pre-image iteration " + std::to_string(t) + " produced a non-finite iterate", t,
                                  result.z);
        const double step = (next - result.z).norm();
        result.z = next;
        result.iterations = t;
        if (step < cfg.tolerance) {
            result.converged = true;
            break;
        }
    }
    return result;
}

/// Kernel width 5 * mean_i(distance from x_i to its nearest other sample).
inline double select_sigma(const DataMatrix& x) {
    require(x.rows() >= 2, "select_sigma needs at least 2 samples, got " + std::to_string(x.rows()));
    const Matrix xt = x.transpose();
    const Index n = x.rows();
    Vector nearest(n);
    parallel_for(n, [&](Index i) {
        double best = std::numeric_limits<double>::infinity();
        for (Index j = 0; j < n; ++j)
            if (j != i) best = std::min(best, detail::squared_distance(xt.col(i), xt.col(j)));
        nearest(i) = std::sqrt(best);
    });
    const double sigma = 5.0 * nearest.mean();
    require(sigma > 0.0, "select_sigma: all samples coincide");
    return sigma;
}

} // namespace kpca_lab

#endif
