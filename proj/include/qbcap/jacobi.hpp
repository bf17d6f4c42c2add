#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qbcap/errors.hpp"
#include "qbcap/matrix.hpp"

namespace qbcap::linalg {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPositivitySlack = 1e-10;
inline constexpr double kJacobiRelativeStop = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigenvalues in ascending order.
class EigenSpectrum {
public:
    EigenSpectrum() = default;

    // Sorts; ties keep their input order.
    explicit EigenSpectrum(std::vector<double> values) : values_(std::move(values)) {
        std::stable_sort(values_.begin(), values_.end());
    }

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    double sum() const noexcept {
        double s = 0.0;
        for (double v : values_) {
            s += v;
        }
        return s;
    }

    double min() const noexcept { return values_.empty() ? 0.0 : values_.front(); }

    // Copy with slack-sized negatives replaced by 0. Only for display: capacity
    // arithmetic always runs on the raw values.
    std::vector<double> clamped_for_report(double slack = kPositivitySlack) const {
        std::vector<double> out(values_);
        for (double& v : out) {
            if (v < 0.0 && v >= -slack) {
                v = 0.0;
            }
        }
        return out;
    }

private:
    std::vector<double> values_;
};

namespace detail {

template <typename Real>
Real off_diagonal_norm(const BasicComplexMatrix<Real>& a) {
    Real s{};
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p, q). J = I except
//   J_pp = J_qq = c,  J_pq = s e,  J_qp = -s conj(e),  e = a_pq / |a_pq|,
// and a <- J^H a J.
template <typename Real>
void rotate(BasicComplexMatrix<Real>& a, std::size_t p, std::size_t q) {
    using C = std::complex<Real>;
    const C apq = a(p, q);
    const Real mag = std::abs(apq);
    if (mag == Real{0}) {
        return;
    }
    const C e = apq / mag;
    const Real app = a(p, p).real();
    const Real aqq = a(q, q).real();
    const Real tau = (aqq - app) / (Real{2} * mag);
    const Real t = (tau >= Real{0} ? Real{1} : Real{-1}) / (std::abs(tau) + std::sqrt(Real{1} + tau * tau));
    const Real c = Real{1} / std::sqrt(Real{1} + t * t);
    const Real s = t * c;

    const std::size_t d = a.rows();
    for (std::size_t k = 0; k < d; ++k) {
        const C akp = a(k, p);
        const C akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(e) * akq;
        a(k, q) = s * e * akp + c * akq;
    }
    for (std::size_t k = 0; k < d; ++k) {
        const C apk = a(p, k);
        const C aqk = a(q, k);
        a(p, k) = c * apk - s * e * aqk;
        a(q, k) = s * std::conj(e) * apk + c * aqk;
    }
    a(p, q) = C{};
    a(q, p) = C{};
    a(p, p) = C{a(p, p).real(), Real{0}};
    a(q, q) = C{a(q, q).real(), Real{0}};
}

} // namespace detail

// Cyclic Jacobi on a Hermitian matrix. Sweeps visit (p, q) with p < q in
// row-major order and stop once the off-diagonal Frobenius norm drops below
// kJacobiRelativeStop times the matrix norm.
template <typename Real>
EigenSpectrum hermitian_eigenvalues(const BasicComplexMatrix<Real>& input, Real tol = Real(kHermitianTol),
                                    int max_sweeps = kJacobiMaxSweeps) {
    if (!input.is_square()) {
        throw DimensionError("hermitian_eigenvalues: matrix is not square");
    }
    const Real defect = hermiticity_defect(input);
    if (defect > tol) {
        throw SymmetryError("hermitian_eigenvalues: input is not Hermitian (defect " +
                            std::to_string(static_cast<double>(defect)) + ")");
    }

    BasicComplexMatrix<Real> a = input;
    const std::size_t d = a.rows();
    const Real scale = a.frobenius_norm();
    const Real stop = Real(kJacobiRelativeStop) * scale;

    int sweep = 0;
    while (detail::off_diagonal_norm(a) >= stop && scale > Real{0}) {
        if (sweep == max_sweeps) {
            throw ConvergenceError("hermitian_eigenvalues: no convergence after " +
                                   std::to_string(max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                detail::rotate(a, p, q);
            }
        }
        ++sweep;
    }

    std::vector<double> values(d);
    for (std::size_t i = 0; i < d; ++i) {
        values[i] = static_cast<double>(a(i, i).real());
    }
    return EigenSpectrum(std::move(values));
}

// Throws DensityMatrixError unless rho is Hermitian, unit-trace and
// positive semidefinite within the given slacks.
inline void validate_density(const ComplexMatrix& rho, double herm_tol = kHermitianTol,
                             double slack = kPositivitySlack) {
    if (!rho.is_square()) {
        throw DensityMatrixError("density matrix must be square");
    }
    if (hermiticity_defect(rho) > herm_tol) {
        throw DensityMatrixError("density matrix is not Hermitian");
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex{1.0}) > slack) {
        throw DensityMatrixError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    if (hermitian_eigenvalues(rho, herm_tol).min() < -slack) {
        throw DensityMatrixError("density matrix has a negative eigenvalue");
    }
}

} // namespace qbcap::linalg
