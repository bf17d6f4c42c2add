#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "qbcap/battery.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/relativistic.hpp"

// Closed-form spectra of the region-pair states, with and without local noise.
//
// All sixteen region x noise cases share one template per noise kind once
// each observer's mode is described by two squares:
//   region I:  m = sin^2(eta), n = cos^2(eta)
//   region II: m = cos^2(eta), n = sin^2(eta)
// m is the weight that leaks into the local Z term, n the weight that
// survives on the correlation terms. The labels lam0..lam3 follow the
// published labelling, which is not always ascending.
namespace qbcap::analytic {

using channels::Noise;
using relativistic::Region;

inline constexpr double kOrderingTol = 1e-12;

struct AnalyticEigenSet {
    std::array<double, 4> labeled{};
    linalg::EigenSpectrum sorted;
    // lam0 <= lam1 <= lam2 <= lam3 as labelled.
    bool ordering_holds = false;
    // {lam2, lam3} are the two largest, so the labelled capacity
    // 2 (lam3 + lam2 - lam1 - lam0) equals the sorted one.
    bool pairing_holds = false;

    double labeled_capacity() const {
        return 2.0 * (labeled[3] + labeled[2] - labeled[1] - labeled[0]);
    }
};

struct ModeSquares {
    double m;
    double n;
};

inline ModeSquares mode_squares(double eta, bool region_one) {
    const double s2 = std::sin(eta) * std::sin(eta);
    const double c2 = std::cos(eta) * std::cos(eta);
    return region_one ? ModeSquares{s2, c2} : ModeSquares{c2, s2};
}

namespace detail {

inline std::array<double, 4> noiseless(double p, ModeSquares a, ModeSquares b) {
    const double mm = a.m * b.m;
    const double pnn = p * a.n * b.n;
    const double root = std::sqrt((a.m - b.m) * (a.m - b.m) + 4.0 * p * p * a.n * b.n);
    return {
        0.25 * (1.0 - a.m - b.m + mm - pnn),
        0.25 * (1.0 - mm + pnn - root),
        0.25 * (1.0 + a.m + b.m + mm - pnn),
        0.25 * (1.0 - mm + pnn + root),
    };
}

inline std::array<double, 4> phase_flip(double p, ModeSquares a, ModeSquares b, double k) {
    const double f = 1.0 - 2.0 * k;
    const double f4 = f * f * f * f;
    const double mm = a.m * b.m;
    const double pnn = p * a.n * b.n;
    const double root = std::sqrt((a.m - b.m) * (a.m - b.m) + 4.0 * f4 * p * p * a.n * b.n);
    return {
        0.25 * (1.0 - a.m - b.m + mm - pnn),
        0.25 * (1.0 - mm + pnn - root),
        0.25 * (1.0 + a.m + b.m + mm - pnn),
        0.25 * (1.0 - mm + pnn + root),
    };
}

inline std::array<double, 4> bit_flip(double p, ModeSquares a, ModeSquares b, double k) {
    const double f2 = (1.0 - 2.0 * k) * (1.0 - 2.0 * k);
    const double z = f2 * (a.m * b.m - p * a.n * b.n);
    const double p2nn = p * p * a.n * b.n;
    const double root_sum =
        std::sqrt(f2 * (a.m + b.m) * (a.m + b.m) + (1.0 - f2) * (1.0 - f2) * p2nn);
    const double root_diff =
        std::sqrt(f2 * (a.m - b.m) * (a.m - b.m) + (1.0 + f2) * (1.0 + f2) * p2nn);
    return {
        0.25 * (1.0 + z - root_sum),
        0.25 * (1.0 - z - root_diff),
        0.25 * (1.0 + z + root_sum),
        0.25 * (1.0 - z + root_diff),
    };
}

inline std::array<double, 4> depolarizing(double p, ModeSquares a, ModeSquares b, double k) {
    const double d = 1.0 - 4.0 * k / 3.0;
    const double d2 = d * d;
    const double mm = a.m * b.m;
    const double pnn = p * a.n * b.n;
    // Labelled with d, not |d|: for k > 3/4 lam1 and lam3 trade places.
    const double root = d * std::sqrt((a.m - b.m) * (a.m - b.m) + 4.0 * d2 * p * p * a.n * b.n);
    return {
        0.25 * (1.0 - d * a.m - d * b.m + d2 * mm - d2 * pnn),
        0.25 * (1.0 - d2 * mm + d2 * pnn - root),
        0.25 * (1.0 + d * a.m + d * b.m + d2 * mm - d2 * pnn),
        0.25 * (1.0 - d2 * mm + d2 * pnn + root),
    };
}

} // namespace detail

inline AnalyticEigenSet analytic_eigenvalues(Region region, Noise noise, double p, double eta_a,
                                             double eta_b, double k = 0.0) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
    if (noise != Noise::None && !(k >= 0.0 && k <= 1.0)) {
        throw DomainError("k must lie in [0, 1]");
    }
    const ModeSquares a = mode_squares(eta_a, relativistic::a_in_region_one(region));
    const ModeSquares b = mode_squares(eta_b, relativistic::b_in_region_one(region));

    AnalyticEigenSet out;
    switch (noise) {
    case Noise::None:
        out.labeled = detail::noiseless(p, a, b);
        break;
    case Noise::PhaseFlip:
        out.labeled = detail::phase_flip(p, a, b, k);
        break;
    case Noise::BitFlip:
        out.labeled = detail::bit_flip(p, a, b, k);
        break;
    case Noise::Depolarizing:
        out.labeled = detail::depolarizing(p, a, b, k);
        break;
    }
    const auto& l = out.labeled;
    out.sorted = linalg::EigenSpectrum({l.begin(), l.end()});
    out.ordering_holds =
        l[0] <= l[1] + kOrderingTol && l[1] <= l[2] + kOrderingTol && l[2] <= l[3] + kOrderingTol;
    out.pairing_holds = std::min(l[2], l[3]) + kOrderingTol >= std::max(l[0], l[1]);
    return out;
}

// 2 (lam3 + lam2 - lam1 - lam0) on the sorted closed-form spectrum.
inline double analytic_capacity(Region region, Noise noise, double p, double eta_a, double eta_b,
                                double k = 0.0) {
    return battery::capacity_zz(analytic_eigenvalues(region, noise, p, eta_a, eta_b, k).sorted);
}

} // namespace qbcap::analytic
