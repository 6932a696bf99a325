#ifndef KPCA_LAB_CLASSIFY_HPP
#define KPCA_LAB_CLASSIFY_HPP

#include "common.hpp"

#include <Eigen/Cholesky>

#include <vector>

namespace kpca_lab {

/// Affine decision function sign(w' [x; 1]); the bias is the last weight.
struct LinearClassifier {
    Vector weights;

    Index input_dim() const { return weights.size() - 1; }
};

inline constexpr double classifier_ridge = 1e-10;

/// Least-squares fit to +1/-1 targets through the ridge-regularised normal
/// equations (A'A + 1e-10 I) w = A'y, A = [features, 1].
inline LinearClassifier fit_linear(const DataMatrix& features, const std::vector<int>& labels) {
    require(features.rows() >= 2, "fit_linear needs at least 2 samples");
    require(static_cast<Index>(labels.size()) == features.rows(), "fit_linear: label count does not match rows");
    bool pos = false, neg = false;
    for (int l : labels) {
        require(l == 1 || l == -1, "fit_linear: labels must be +1 or -1");
        (l > 0 ? pos : neg) = true;
    }
    require(pos && neg, "fit_linear: both classes must be present");

    Matrix a(features.rows(), features.cols() + 1);
    a.leftCols(features.cols()) = features;
    a.col(features.cols()).setOnes();
    Vector y(features.rows());
    for (Index i = 0; i < y.size(); ++i) y(i) = labels[static_cast<std::size_t>(i)];

    Matrix normal = a.transpose() * a;
    normal.diagonal().array() += classifier_ridge;
    LinearClassifier c;
    c.weights = normal.ldlt().solve(a.transpose() * y);
    if (!c.weights.allFinite()) throw InputError("fit_linear: solution is not finite");
    return c;
}

/// +1 or -1; a score of exactly zero maps to +1.
template <typename Derived>
int predict(const LinearClassifier& c, const Eigen::MatrixBase<Derived>& x) {
    require(x.size() == c.input_dim(), "predict: expected " + std::to_string(c.input_dim()) + " features, got " +
                                           std::to_string(x.size()));
    const double score = c.weights.head(c.input_dim()).dot(x.derived().reshaped()) + c.weights(c.input_dim());
    return score >= 0.0 ? 1 : -1;
}

inline std::vector<int> predict_batch(const LinearClassifier& c, const DataMatrix& features) {
    std::vector<int> out(static_cast<std::size_t>(features.rows()));
    for (Index i = 0; i < features.rows(); ++i) out[static_cast<std::size_t>(i)] = predict(c, features.row(i));
    return out;
}

/// Fraction of rows whose prediction differs from the label.
inline double error_rate(const LinearClassifier& c, const DataMatrix& features, const std::vector<int>& labels) {
    require(static_cast<Index>(labels.size()) == features.rows(), "error_rate: label count does not match rows");
    require(features.rows() > 0, "error_rate: no samples");
    Index wrong = 0;
    for (Index i = 0; i < features.rows(); ++i)
        if (predict(c, features.row(i)) != labels[static_cast<std::size_t>(i)]) ++wrong;
    return static_cast<double>(wrong) / static_cast<double>(features.rows());
}

} // namespace kpca_lab

#endif
