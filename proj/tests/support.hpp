#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qbcap/matrix.hpp"

namespace qbcap::oracle {

using linalg::Complex;
using linalg::ComplexMatrix;

// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
    for (auto& c : cols) {
        for (auto& x : c) {
            x = {g(rng), g(rng)};
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Complex dot{};
            for (std::size_t r = 0; r < d; ++r) {
                dot += std::conj(cols[i][r]) * cols[j][r];
            }
            for (std::size_t r = 0; r < d; ++r) {
                cols[j][r] -= dot * cols[i][r];
            }
        }
        double norm = 0.0;
        for (const auto& x : cols[j]) {
            norm += std::norm(x);
        }
        norm = std::sqrt(norm);
        for (auto& x : cols[j]) {
            x /= norm;
        }
    }
    ComplexMatrix u(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

inline ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix h(d);
    for (std::size_t r = 0; r < d; ++r) {
        h(r, r) = g(rng);
        for (std::size_t c = r + 1; c < d; ++c) {
            h(r, c) = {g(rng), g(rng)};
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

// Spectrum of the X state 1/4 (I + a Z.I + b I.Z + c1 XX + c2 YY + c3 ZZ)
// from its two 2x2 blocks, ascending.
inline std::array<double, 4> x_state_spectrum(double a, double b, double c1, double c2, double c3) {
    const double u = std::hypot(a + b, c1 - c2);
    const double v = std::hypot(a - b, c1 + c2);
    std::array<double, 4> e{0.25 * (1 + c3 - u), 0.25 * (1 + c3 + u), 0.25 * (1 - c3 - v), 0.25 * (1 - c3 + v)};
    std::sort(e.begin(), e.end());
    return e;
}

// Z.Z capacity of an X state: the outer block pair wins unless both
// eigenvalues of one block exceed both of the other.
inline double x_state_capacity(double a, double b, double c1, double c2, double c3) {
    const double u = std::hypot(a + b, c1 - c2);
    const double v = std::hypot(a - b, c1 + c2);
    return std::max(u + v, 2.0 * std::abs(c3));
}

} // namespace qbcap::oracle
