#include "kpca_lab/eigensolver.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace kpca_lab;

namespace {

void expect_valid(const Matrix& a, const EigenDecomposition& eig) {
    const Index n = a.rows();
    ASSERT_EQ(eig.values.size(), n);
    ASSERT_EQ(eig.vectors.rows(), n);
    ASSERT_EQ(eig.vectors.cols(), n);
    EXPECT_LE((eig.vectors.transpose() * eig.vectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-9);
    const double scale = std::max(1.0, std::abs(eig.values(0)));
    for (Index k = 0; k < n; ++k) {
        if (k + 1 < n) {
            EXPECT_GE(eig.values(k), eig.values(k + 1));
        }
        const Vector r = a * eig.vectors.col(k) - eig.values(k) * eig.vectors.col(k);
        EXPECT_LE(r.cwiseAbs().maxCoeff(), 1e-8 * scale);
        Index arg;
        eig.vectors.col(k).cwiseAbs().maxCoeff(&arg);
        EXPECT_GE(eig.vectors(arg, k), 0.0);
    }
}

} // namespace

TEST(SymEig, Identity) {
    const auto eig = sym_eig(Matrix::Identity(3, 3));
    EXPECT_TRUE(eig.values.isApprox(Vector::Ones(3)));
    expect_valid(Matrix::Identity(3, 3), eig);
    // any orthonormal basis works for the identity; the sign rule still holds
}

TEST(SymEig, Diagonal) {
    Matrix a(2, 2);
    a << 1, 0, 0, 3;
    const auto eig = sym_eig(a);
    EXPECT_DOUBLE_EQ(eig.values(0), 3.0);
    EXPECT_DOUBLE_EQ(eig.values(1), 1.0);
    EXPECT_NEAR(eig.vectors(1, 0), 1.0, 1e-15);
    EXPECT_NEAR(eig.vectors(0, 1), 1.0, 1e-15);
}

TEST(SymEig, TwoByTwoByHand) {
    // characteristic polynomial (2 - l)^2 - 1 = 0  ->  l = 3, 1
    Matrix a(2, 2);
    a << 2, 1, 1, 2;
    const auto eig = sym_eig(a);
    EXPECT_NEAR(eig.values(0), 3.0, 1e-14);
    EXPECT_NEAR(eig.values(1), 1.0, 1e-14);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(eig.vectors(0, 0), h, 1e-14);
    EXPECT_NEAR(eig.vectors(1, 0), h, 1e-14);
    // equal magnitudes: the first entry carries the sign
    EXPECT_NEAR(eig.vectors(0, 1), h, 1e-14);
    EXPECT_NEAR(eig.vectors(1, 1), -h, 1e-14);
    expect_valid(a, eig);
}

TEST(SymEig, RejectsNonFinite) {
    Matrix a = Matrix::Identity(2, 2);
    a(0, 0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(sym_eig(a), InputError);
    a(0, 0) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(sym_eig(a), InputError);
}

TEST(SymEig, RejectsAsymmetric) {
    Matrix a(2, 2);
    a << 1, 2, 2.001, 1;
    EXPECT_THROW(sym_eig(a), InputError);
    EXPECT_THROW(sym_eig(Matrix::Zero(2, 3)), InputError);
}

TEST(SymEig, ToleratesRoundoffAsymmetry) {
    Matrix a(2, 2);
    a << 1, 2, 2 + 1e-15, 1;
    EXPECT_NO_THROW(sym_eig(a));
}

TEST(SymEig, Deterministic) {
    std::mt19937_64 rng(5);
    const Matrix a = oracle::random_symmetric(rng, 30);
    const auto e1 = sym_eig(a);
    const auto e2 = sym_eig(a);
    EXPECT_EQ(e1.values, e2.values);
    EXPECT_EQ(e1.vectors, e2.vectors);
}

TEST(SymEig, RepeatedEigenvalues) {
    std::mt19937_64 rng(9);
    // Q diag(5,5,5,2,2,0) Q'
    const Matrix q = oracle::random_matrix(rng, 6, 6).householderQr().householderQ();
    Vector d(6);
    d << 5, 5, 5, 2, 2, 0;
    const Matrix a = q * d.asDiagonal() * q.transpose();
    const auto eig = sym_eig(0.5 * (a + a.transpose()));
    for (Index k = 0; k < 6; ++k) EXPECT_NEAR(eig.values(k), d(k), 1e-12);
    expect_valid(0.5 * (a + a.transpose()), eig);
}

TEST(SymEigProperty, ReconstructionAndTrace) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(1, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = order(rng);
        const Matrix a = oracle::random_symmetric(rng, n);
        const auto eig = sym_eig(a);
        expect_valid(a, eig);
        const Matrix back = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
        EXPECT_LE((back - a).cwiseAbs().maxCoeff(), 1e-8) << "order " << n;
        const double tr = a.trace();
        EXPECT_LE(std::abs(eig.values.sum() - tr), 1e-9 * std::max(1.0, std::abs(tr)) + 1e-12 * n);
    }
}
