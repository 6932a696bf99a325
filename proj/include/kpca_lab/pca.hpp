#ifndef KPCA_LAB_PCA_HPP
#define KPCA_LAB_PCA_HPP

#include "common.hpp"
#include "eigensolver.hpp"
#include "kernels.hpp"

#include <algorithm>
#include <cmath>

namespace kpca_lab {

/// Linear PCA model. basis is D x M with orthonormal columns; eigenvalues are
/// the matching 1/N sample-covariance eigenvalues, descending.
struct PcaModel {
    Vector mean;
    Matrix basis;
    Vector eigenvalues;

    Index input_dim() const { return basis.rows(); }
    Index components() const { return basis.cols(); }
};

namespace detail {

inline void check_pca_args(const DataMatrix& x, Index m) {
    require(x.rows() >= 2, "PCA needs at least 2 samples, got " + std::to_string(x.rows()));
    require(x.cols() >= 1, "PCA needs at least 1 feature");
    if (!x.allFinite()) throw InputError("PCA input contains non-finite values");
    const Index limit = std::min(x.rows(), x.cols());
    require(m >= 1 && m <= limit,
            "component count " + std::to_string(m) + " outside [1, " + std::to_string(limit) + "]");
}

inline DataMatrix centered(const DataMatrix& x, const Vector& mean) {
    return x.rowwise() - mean.transpose();
}

// Orthonormalise columns [from, cols) against all earlier columns, replacing
// any that vanish with the first standard basis vector that survives.
inline void complete_orthonormal(Matrix& basis, Index from) {
    const Index dim = basis.rows();
    Index candidate = 0;
    for (Index k = from; k < basis.cols(); ++k) {
        for (;;) {
            Vector v = Vector::Unit(dim, candidate++);
            for (int pass = 0; pass < 2; ++pass)
                for (Index j = 0; j < k; ++j) v -= basis.col(j).dot(v) * basis.col(j);
            const double norm = v.norm();
            if (norm > 1e-6) {
                basis.col(k) = v / norm;
                break;
            }
        }
    }
}

} // namespace detail

/// PCA through the D x D sample covariance (1/N normalisation).
inline PcaModel fit_pca(const DataMatrix& x, Index m) {
    detail::check_pca_args(x, m);
    PcaModel model;
    model.mean = column_means(x);
    const DataMatrix xc = detail::centered(x, model.mean);
    const Matrix cov = (xc.transpose() * xc) / static_cast<double>(x.rows());
    const EigenDecomposition eig = sym_eig(cov);
    model.basis = eig.vectors.leftCols(m);
    model.eigenvalues = eig.values.head(m).cwiseMax(0.0);
    return model;
}

/// PCA through the N x N inner-product matrix, for D much larger than N.
/// Same contract as fit_pca. Directions without variance are filled with an
/// orthonormal completion and get eigenvalue 0.
inline PcaModel fit_pca_dual(const DataMatrix& x, Index m) {
    detail::check_pca_args(x, m);
    const auto n = static_cast<double>(x.rows());
    PcaModel model;
    model.mean = column_means(x);
    const DataMatrix xc = detail::centered(x, model.mean);
    const Matrix inner = kernel_matrix(LinearKernel{}, xc, xc) / n;
    const EigenDecomposition eig = sym_eig(inner);

    const double top = std::max(eig.values(0), 0.0);
    model.basis = Matrix::Zero(x.cols(), m);
    model.eigenvalues = Vector::Zero(m);
    Index filled = 0;
    for (; filled < m; ++filled) {
        const double lambda = eig.values(filled);
        if (!(lambda > 1e-10 * top) || top == 0.0) break;
        Vector u = xc.transpose() * eig.vectors.col(filled);
        // back-projection has norm sqrt(N * lambda); renormalise explicitly
        for (Index j = 0; j < filled; ++j) u -= model.basis.col(j).dot(u) * model.basis.col(j);
        model.basis.col(filled) = u / u.norm();
        model.eigenvalues(filled) = lambda;
    }
    detail::complete_orthonormal(model.basis, filled);
    apply_sign_convention(model.basis);
    return model;
}

/// y_k = (x - mean)' u_k
template <typename Derived>
Vector pca_project(const PcaModel& model, const Eigen::MatrixBase<Derived>& x) {
    require(x.size() == model.input_dim(), "pca_project: expected dimension " + std::to_string(model.input_dim()) +
                                               ", got " + std::to_string(x.size()));
    const Vector diff = x.derived().reshaped() - model.mean;
    return model.basis.transpose() * diff;
}

/// Projects every row; returns N x M.
inline Matrix pca_project_rows(const PcaModel& model, const DataMatrix& x) {
    require(x.cols() == model.input_dim(), "pca_project_rows: expected " + std::to_string(model.input_dim()) +
                                               " columns, got " + std::to_string(x.cols()));
    return detail::centered(x, model.mean) * model.basis;
}

/// mean + sum_k y_k u_k
template <typename Derived>
Vector pca_reconstruct(const PcaModel& model, const Eigen::MatrixBase<Derived>& y) {
    require(y.size() == model.components(), "pca_reconstruct: expected " + std::to_string(model.components()) +
                                                " weights, got " + std::to_string(y.size()));
    return model.mean + model.basis * y.derived().reshaped();
}

} // namespace kpca_lab

#endif
