#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qbcap/errors.hpp"

namespace qbcap::linalg {

// Dense complex matrix, row-major. Most of the library works with square
// matrices (states, operators) but the Hawking isometry is 4x2, so the shape
// is general.
template <typename Real>
class BasicComplexMatrix {
public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    BasicComplexMatrix() = default;

    explicit BasicComplexMatrix(std::size_t dim) : BasicComplexMatrix(dim, dim) {}

    BasicComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, value_type{}) {}

    // Row-major nested initializer: {{a, b}, {c, d}}.
    BasicComplexMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged matrix initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static BasicComplexMatrix identity(std::size_t dim) {
        BasicComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = Real{1};
        }
        return m;
    }

    static BasicComplexMatrix diagonal(std::span<const Real> values) {
        BasicComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    std::size_t dim() const {
        if (!is_square()) {
            throw DimensionError("dim() requested on a non-square matrix");
        }
        return rows_;
    }

    value_type& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    std::span<const value_type> entries() const noexcept { return data_; }

    value_type trace() const {
        value_type t{};
        for (std::size_t i = 0; i < dim(); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Real frobenius_norm() const {
        Real s{};
        for (const auto& z : data_) {
            s += std::norm(z);
        }
        return std::sqrt(s);
    }

    BasicComplexMatrix& operator+=(const BasicComplexMatrix& o) {
        require_same_shape(o, "+=");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }

    BasicComplexMatrix& operator-=(const BasicComplexMatrix& o) {
        require_same_shape(o, "-=");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }

    BasicComplexMatrix& operator*=(value_type s) noexcept {
        for (auto& z : data_) {
            z *= s;
        }
        return *this;
    }

    friend BasicComplexMatrix operator+(BasicComplexMatrix a, const BasicComplexMatrix& b) {
        return a += b;
    }
    friend BasicComplexMatrix operator-(BasicComplexMatrix a, const BasicComplexMatrix& b) {
        return a -= b;
    }
    friend BasicComplexMatrix operator*(value_type s, BasicComplexMatrix a) { return a *= s; }
    friend BasicComplexMatrix operator*(BasicComplexMatrix a, value_type s) { return a *= s; }

    friend BasicComplexMatrix operator*(const BasicComplexMatrix& a, const BasicComplexMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product: inner dimensions differ (" +
                                 std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + ")");
        }
        BasicComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type aik = a(i, k);
                if (aik == value_type{}) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const BasicComplexMatrix&, const BasicComplexMatrix&) = default;

private:
    void require_same_shape(const BasicComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DimensionError(std::string("shape mismatch in ") + op);
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

using ComplexMatrix = BasicComplexMatrix<double>;
using Complex = std::complex<double>;

// Kronecker product. The first factor owns the slower index, so with
// qubit A first the basis order is |00>, |01>, |10>, |11>.
template <typename Real>
BasicComplexMatrix<Real> tensor(const BasicComplexMatrix<Real>& a, const BasicComplexMatrix<Real>& b) {
    BasicComplexMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const auto s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

template <typename Real>
BasicComplexMatrix<Real> dagger(const BasicComplexMatrix<Real>& a) {
    BasicComplexMatrix<Real> out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

// Largest |a_ij - b_ij|.
template <typename Real>
Real max_abs_diff(const BasicComplexMatrix<Real>& a, const BasicComplexMatrix<Real>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    Real m{};
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

// max |a_ij - conj(a_ji)|
template <typename Real>
Real hermiticity_defect(const BasicComplexMatrix<Real>& a) {
    const std::size_t d = a.dim();
    Real m{};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

// Reduced matrix over the subsystems listed in `keep`, in that order.
// `dims` gives the dimension of every subsystem, slowest index first.
template <typename Real>
BasicComplexMatrix<Real> partial_trace(const BasicComplexMatrix<Real>& rho,
                                       std::span<const std::size_t> keep,
                                       std::span<const std::size_t> dims) {
    const std::size_t n = dims.size();
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
    if (!rho.is_square() || total != rho.rows()) {
        throw DimensionError("partial_trace: subsystem dims multiply to " + std::to_string(total) +
                             " but matrix is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()));
    }
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n || kept[k]) {
            throw DimensionError("partial_trace: keep indices must be valid and distinct");
        }
        kept[k] = true;
    }
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < n; ++i) {
        if (!kept[i]) {
            traced.push_back(i);
        }
    }

    std::vector<std::size_t> stride(n, 1);
    for (std::size_t i = n; i-- > 1;) {
        stride[i - 1] = stride[i] * dims[i];
    }

    // Offset of a multi-index over a subset of subsystems, enumerated with
    // the last listed subsystem fastest.
    auto offsets = [&](const std::vector<std::size_t>& subsystems) {
        std::size_t count = 1;
        for (std::size_t s : subsystems) {
            count *= dims[s];
        }
        std::vector<std::size_t> out(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rem = idx;
            std::size_t off = 0;
            for (std::size_t j = subsystems.size(); j-- > 0;) {
                const std::size_t s = subsystems[j];
                off += (rem % dims[s]) * stride[s];
                rem /= dims[s];
            }
            out[idx] = off;
        }
        return out;
    };

    const std::vector<std::size_t> keep_vec(keep.begin(), keep.end());
    const auto keep_off = offsets(keep_vec);
    const auto trace_off = offsets(traced);

    BasicComplexMatrix<Real> out(keep_off.size());
    for (std::size_t r = 0; r < keep_off.size(); ++r) {
        for (std::size_t c = 0; c < keep_off.size(); ++c) {
            std::complex<Real> s{};
            for (std::size_t t : trace_off) {
                s += rho(keep_off[r] + t, keep_off[c] + t);
            }
            out(r, c) = s;
        }
    }
    return out;
}

template <typename Real>
BasicComplexMatrix<Real> partial_trace(const BasicComplexMatrix<Real>& rho,
                                       std::initializer_list<std::size_t> keep,
                                       std::initializer_list<std::size_t> dims) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()),
                         std::span<const std::size_t>(dims.begin(), dims.size()));
}

namespace pauli {

inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }
inline ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }
inline ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

} // namespace pauli

} // namespace qbcap::linalg
