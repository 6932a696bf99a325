#ifndef KPCA_LAB_KERNELS_HPP
#define KPCA_LAB_KERNELS_HPP

#include "common.hpp"
#include "parallel.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <variant>

namespace kpca_lab {

struct LinearKernel {};

/// (x'y + offset)^degree. offset = 0 gives the homogeneous form.
struct PolynomialKernel {
    int degree = 5;
    double offset = 0.0;
};

/// exp(-|x - y|^2 / (2 sigma^2))
struct GaussianKernel {
    double sigma = 1.0;
};

using KernelSpec = std::variant<LinearKernel, PolynomialKernel, GaussianKernel>;

inline void validate(const KernelSpec& spec) {
    if (const auto* p = std::get_if<PolynomialKernel>(&spec)) {
        require(p->degree >= 1, "polynomial degree must be >= 1");
        require(std::isfinite(p->offset) && p->offset >= 0.0, "polynomial offset must be finite and >= 0");
    } else if (const auto* g = std::get_if<GaussianKernel>(&spec)) {
        require(std::isfinite(g->sigma) && g->sigma > 0.0, "gaussian sigma must be finite and > 0");
    }
}

inline bool is_gaussian(const KernelSpec& spec) { return std::holds_alternative<GaussianKernel>(spec); }

inline std::string describe(const KernelSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, LinearKernel>)
                os << "linear";
            else if constexpr (std::is_same_v<K, PolynomialKernel>)
                os << "polynomial(degree=" << k.degree << ", offset=" << k.offset << ")";
            else
                os << "gaussian(sigma=" << k.sigma << ")";
        },
        spec);
    return os.str();
}

namespace detail {

template <typename A, typename B>
double dot(const A& x, const B& y) {
    double s = 0.0;
    for (Index d = 0; d < x.size(); ++d) s += x(d) * y(d);
    return s;
}

template <typename A, typename B>
double squared_distance(const A& x, const B& y) {
    double s = 0.0;
    for (Index d = 0; d < x.size(); ++d) {
        const double diff = x(d) - y(d);
        s += diff * diff;
    }
    return s;
}

inline double gaussian_from_sqdist(double sqdist, double sigma) {
    return std::exp(-sqdist / (2.0 * sigma * sigma));
}

// Plain sequential sums: row i and column i of a symmetric matrix produce
// bitwise-equal means, which keeps the centered matrix exactly symmetric.
inline double mean(const Vector& v) {
    double s = 0.0;
    for (Index i = 0; i < v.size(); ++i) s += v(i);
    return v.size() ? s / static_cast<double>(v.size()) : 0.0;
}

inline Vector row_means(const Matrix& k) {
    Vector out(k.rows());
    for (Index i = 0; i < k.rows(); ++i) {
        double s = 0.0;
        for (Index j = 0; j < k.cols(); ++j) s += k(i, j);
        out(i) = s / static_cast<double>(k.cols());
    }
    return out;
}

inline Vector col_means(const Matrix& k) {
    Vector out(k.cols());
    for (Index j = 0; j < k.cols(); ++j) {
        double s = 0.0;
        for (Index i = 0; i < k.rows(); ++i) s += k(i, j);
        out(j) = s / static_cast<double>(k.rows());
    }
    return out;
}

} // namespace detail

/// Evaluates the kernel on two vectors (any Eigen vector expressions, including rows).
template <typename A, typename B>
double eval_kernel(const KernelSpec& spec, const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
    require(x.size() == y.size(), "kernel arguments differ in dimension: " + std::to_string(x.size()) + " vs " +
                                      std::to_string(y.size()));
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, LinearKernel>)
                return detail::dot(x, y);
            else if constexpr (std::is_same_v<K, PolynomialKernel>)
                return std::pow(detail::dot(x, y) + k.offset, k.degree);
            else
                return detail::gaussian_from_sqdist(detail::squared_distance(x, y), k.sigma);
        },
        spec);
}

/// K(i, j) = kappa(a_i, b_j) for rows a_i of `a` and b_j of `b`.
/// Rows are filled in parallel; every entry is computed by the same scalar
/// loop so the result does not depend on the worker count.
inline Matrix kernel_matrix(const KernelSpec& spec, const DataMatrix& a, const DataMatrix& b) {
    validate(spec);
    require(a.cols() == b.cols(), "kernel_matrix: feature dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                      std::to_string(b.cols()) + ")");
    // samples as contiguous columns
    const Matrix at = a.transpose();
    const Matrix bt = b.transpose();
    Matrix k(a.rows(), b.rows());
    parallel_for(a.rows(), [&](Index i) {
        for (Index j = 0; j < b.rows(); ++j) k(i, j) = eval_kernel(spec, at.col(i), bt.col(j));
    });
    return k;
}

/// Training Gram centering: K - 1K - K1 + 1K1 with 1 the N x N matrix of 1/N.
inline Matrix center_gram(const Matrix& k) {
    require(k.rows() == k.cols(), "center_gram: matrix must be square, got " + std::to_string(k.rows()) + "x" +
                                      std::to_string(k.cols()));
    const Index n = k.rows();
    if (n == 0) return k;
    const Vector row_means = detail::row_means(k);
    const Vector col_means = detail::col_means(k);
    const double total = detail::mean(col_means);
    Matrix out(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) out(i, j) = k(i, j) - (col_means(j) + row_means(i)) + total;
    return out;
}

/// Out-of-sample centering of a T x N test kernel block against the N x N
/// uncentered training kernel matrix.
inline Matrix center_cross(const Matrix& k_test, const Matrix& k_train) {
    require(k_train.rows() == k_train.cols(), "center_cross: training kernel matrix must be square");
    require(k_test.cols() == k_train.rows(), "center_cross: test block has " + std::to_string(k_test.cols()) +
                                                 " columns, training set has " + std::to_string(k_train.rows()));
    const Index n = k_train.rows();
    if (n == 0) return k_test;
    const Vector train_col_means = detail::col_means(k_train);
    const double train_total = detail::mean(train_col_means);
    const Vector test_row_means = detail::row_means(k_test);
    Matrix out(k_test.rows(), n);
    for (Index j = 0; j < n; ++j)
        for (Index t = 0; t < k_test.rows(); ++t)
            out(t, j) = k_test(t, j) - (train_col_means(j) + test_row_means(t)) + train_total;
    return out;
}

} // namespace kpca_lab

#endif
