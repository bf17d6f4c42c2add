#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qbcap/jacobi.hpp"
#include "qbcap/matrix.hpp"
#include "support.hpp"

using namespace qbcap;
using namespace qbcap::linalg;

TEST(Matrix, TensorPutsFirstFactorOnSlowIndex) {
    const auto zx = tensor(pauli::z(), pauli::x());
    ASSERT_EQ(zx.rows(), 4u);
    EXPECT_EQ(zx(0, 1), Complex(1.0));
    EXPECT_EQ(zx(2, 3), Complex(-1.0));
    EXPECT_EQ(zx(0, 2), Complex(0.0));
}

TEST(Matrix, TensorOfRectangularFactors) {
    ComplexMatrix col(2, 1);
    col(0, 0) = 1.0;
    const auto t = tensor(col, pauli::identity());
    EXPECT_EQ(t.rows(), 4u);
    EXPECT_EQ(t.cols(), 2u);
}

TEST(Matrix, DaggerAndPauliAlgebra) {
    const auto y = pauli::y();
    EXPECT_EQ(dagger(y), y);
    EXPECT_LT(max_abs_diff(pauli::x() * pauli::y(), Complex{0.0, 1.0} * pauli::z()), 1e-15);
    EXPECT_EQ(hermiticity_defect(y), 0.0);
}

TEST(Matrix, MismatchedShapesThrow) {
    EXPECT_THROW(ComplexMatrix(2) * ComplexMatrix(3), DimensionError);
    EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(3), DimensionError);
    EXPECT_THROW((void)ComplexMatrix(2, 3).dim(), DimensionError);
}

TEST(PartialTrace, ProductStateReturnsFactors) {
    std::mt19937_64 rng(7);
    const auto a = oracle::random_unitary(2, rng) * ComplexMatrix::diagonal(std::vector<double>{0.3, 0.7}) *
                   dagger(oracle::random_unitary(2, rng));
    ComplexMatrix b(3);
    b(0, 0) = 0.5;
    b(1, 1) = 0.25;
    b(2, 2) = 0.25;
    b(0, 1) = Complex{0.1, 0.05};
    b(1, 0) = std::conj(b(0, 1));
    const auto ab = tensor(a, b);
    EXPECT_LT(max_abs_diff(partial_trace(ab, {0}, {2, 3}), a * b.trace()), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(ab, {1}, {2, 3}), b * a.trace()), 1e-14);
}

TEST(PartialTrace, KeepOrderPermutesSubsystems) {
    const auto zx = tensor(pauli::z(), pauli::x());
    const auto xz = tensor(pauli::x(), pauli::z());
    EXPECT_LT(max_abs_diff(partial_trace(zx, {1, 0}, {2, 2}), xz), 1e-15);
}

TEST(PartialTrace, BellStateMarginalIsMaximallyMixed) {
    ComplexMatrix bell(4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    EXPECT_LT(max_abs_diff(partial_trace(bell, {1}, {2, 2}), 0.5 * ComplexMatrix::identity(2)), 1e-15);
}

TEST(PartialTrace, BadArgumentsThrow) {
    EXPECT_THROW(partial_trace(ComplexMatrix(4), {0}, {2, 3}), DimensionError);
    EXPECT_THROW(partial_trace(ComplexMatrix(4), {0, 0}, {2, 2}), DimensionError);
    EXPECT_THROW(partial_trace(ComplexMatrix(4), {2}, {2, 2}), DimensionError);
}

TEST(Jacobi, KnownSpectra) {
    const ComplexMatrix m{{2.0, 1.0}, {1.0, 2.0}};
    const auto e = hermitian_eigenvalues(m);
    EXPECT_NEAR(e[0], 1.0, 1e-14);
    EXPECT_NEAR(e[1], 3.0, 1e-14);
    const auto y = hermitian_eigenvalues(pauli::y());
    EXPECT_NEAR(y[0], -1.0, 1e-14);
    EXPECT_NEAR(y[1], 1.0, 1e-14);
    const auto id = hermitian_eigenvalues(ComplexMatrix::identity(4));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(id[i], 1.0);
    }
    EXPECT_EQ(hermitian_eigenvalues(ComplexMatrix(3)).sum(), 0.0);
}

TEST(Jacobi, RecoversConjugatedDiagonal) {
    std::mt19937_64 rng(11);
    const std::vector<double> diag{-0.4, 0.1, 0.1, 0.9, 2.5};
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = oracle::random_unitary(diag.size(), rng);
        const auto h = u * ComplexMatrix::diagonal(diag) * dagger(u);
        const auto e = hermitian_eigenvalues(h, 1e-10);
        for (std::size_t i = 0; i < diag.size(); ++i) {
            EXPECT_NEAR(e[i], diag[i], 1e-12);
        }
    }
}

TEST(Jacobi, TraceAndOrderingOnRandomHermitian) {
    std::mt19937_64 rng(3);
    for (std::size_t d : {2u, 4u, 16u}) {
        const auto h = oracle::random_hermitian(d, rng);
        const auto e = hermitian_eigenvalues(h);
        EXPECT_TRUE(std::is_sorted(e.values().begin(), e.values().end()));
        EXPECT_NEAR(e.sum(), h.trace().real(), 1e-11);
        double sq = 0.0;
        for (double v : e.values()) {
            sq += v * v;
        }
        EXPECT_NEAR(sq, h.frobenius_norm() * h.frobenius_norm(), 1e-10);
    }
}

TEST(Jacobi, RejectsBadInput) {
    EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), DimensionError);
    const ComplexMatrix skew{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(hermitian_eigenvalues(skew), SymmetryError);
    ComplexMatrix h{{1.0, 0.5}, {0.5, 1.0}};
    EXPECT_THROW(hermitian_eigenvalues(h, 1e-12, 0), ConvergenceError);
}

TEST(Jacobi, EigenSpectrumSortsAndClamps) {
    const EigenSpectrum s({0.5, -1e-12, 0.25});
    EXPECT_EQ(s[0], -1e-12);
    EXPECT_EQ(s.min(), -1e-12);
    EXPECT_EQ(s.clamped_for_report()[0], 0.0);
    EXPECT_EQ(EigenSpectrum({-1e-3}).clamped_for_report()[0], -1e-3);
}

TEST(DensityValidation, ErrorPaths) {
    EXPECT_NO_THROW(validate_density(0.5 * ComplexMatrix::identity(2)));
    EXPECT_THROW(validate_density(ComplexMatrix::identity(2)), DensityMatrixError);
    EXPECT_THROW(validate_density(ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5})), DensityMatrixError);
    const ComplexMatrix skew{{0.5, 0.1}, {0.0, 0.5}};
    EXPECT_THROW(validate_density(skew), DensityMatrixError);
    EXPECT_THROW(validate_density(ComplexMatrix(2, 1)), DensityMatrixError);
}
