#ifndef KPCA_LAB_EIGENSOLVER_HPP
#define KPCA_LAB_EIGENSOLVER_HPP

#include "common.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace kpca_lab {

/// Full symmetric eigendecomposition: values descending, one eigenvector per column.
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// Flips each column so that its entry of largest magnitude is non-negative.
/// Ties in magnitude resolve to the lowest row index.
inline void apply_sign_convention(Matrix& vectors) {
    for (Index k = 0; k < vectors.cols(); ++k) {
        Index arg = 0;
        double best = -1.0;
        for (Index i = 0; i < vectors.rows(); ++i) {
            const double mag = std::abs(vectors(i, k));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (vectors.rows() > 0 && vectors(arg, k) < 0.0) vectors.col(k) *= -1.0;
    }
}

/// Throws InputError unless `a` is square, finite and symmetric to 1e-12 relative.
inline void check_symmetric(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw InputError("symmetric matrix must be square and non-empty, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    if (!a.allFinite()) throw InputError("matrix contains non-finite entries");
    const double scale = a.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * scale;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = j + 1; i < a.rows(); ++i)
            if (std::abs(a(i, j) - a(j, i)) > tol)
                throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

/// Deterministic symmetric eigensolver.
///
/// Eigenvalues are returned in descending order; equal eigenvalues keep the
/// solver's column order (stable sort). Every eigenvector obeys
/// apply_sign_convention.
inline EigenDecomposition sym_eig(const Matrix& a) {
    check_symmetric(a);
    const Matrix sym = 0.5 * (a + a.transpose());

    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw InputError("symmetric eigensolver failed to converge");

    const Index n = sym.rows();
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    const Vector& raw = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Index l, Index r) { return raw(l) > raw(r); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        out.values(k) = raw(src);
        out.vectors.col(k) = solver.eigenvectors().col(src);
    }
    apply_sign_convention(out.vectors);
    return out;
}

} // namespace kpca_lab

#endif
