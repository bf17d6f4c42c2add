#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string_view>

#include "qbcap/bloch.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/relativistic.hpp"

// The capacity formulas and Bloch forms exactly as they were published,
// typos included. Nothing in the computation path uses these; they exist so
// the verify report can hold them against the pipeline and name the ones
// that disagree.
//
// The capacity formulas were printed for a fixed Bob mode at eta_b = pi/6
// and, with noise, for p = 0.3.
namespace qbcap::analytic::published {

using channels::Noise;
using relativistic::Region;

inline constexpr double kReferenceP = 0.3;
inline constexpr double kReferenceEtaB = std::numbers::pi / 6.0;

struct CapacityFormula {
    std::string_view label;
    Noise noise;
    Region region;
    // The coefficient in front of the trig term under the radical, as printed.
    std::string_view coefficient_text;
    double coefficient;
    // Noiseless formulas print "3p^2" / "p^2"; the stored value is the p^2 multiplier.
    bool scales_with_p_squared;

    double coefficient_at(double p) const {
        return scales_with_p_squared ? coefficient * p * p : coefficient;
    }
};

inline constexpr std::array<CapacityFormula, 16> kCapacityFormulas{{
    {"C(A1B1)", Noise::None, Region::AIBI, "3p^2", 3.0, true},
    {"C(A1B2)", Noise::None, Region::AIBII, "p^2", 1.0, true},
    {"C(A2B1)", Noise::None, Region::AIIBI, "3p^2", 3.0, true},
    {"C(A2B2)", Noise::None, Region::AIIBII, "p^2", 1.0, true},
    {"C_pf(A1B1)", Noise::PhaseFlip, Region::AIBI, "27/100", 27.0 / 100.0, false},
    {"C_pf(A1B2)", Noise::PhaseFlip, Region::AIBII, "9/100", 9.0 / 100.0, false},
    {"C_pf(A2B1)", Noise::PhaseFlip, Region::AIIBI, "27/100", 27.0 / 100.0, false},
    {"C_pf(A2B2)", Noise::PhaseFlip, Region::AIIBII, "9/100", 9.0 / 100.0, false},
    {"C_bf(A1B1)", Noise::BitFlip, Region::AIBI, "27/400", 27.0 / 400.0, false},
    {"C_bf(A1B2)", Noise::BitFlip, Region::AIBII, "9/400", 9.0 / 400.0, false},
    {"C_bf(A2B1)", Noise::BitFlip, Region::AIIBI, "27/400", 27.0 / 400.0, false},
    {"C_bf(A2B2)", Noise::BitFlip, Region::AIIBII, "9/400", 9.0 / 400.0, false},
    {"C_dep(A1B1)", Noise::Depolarizing, Region::AIBI, "27/100", 27.0 / 100.0, false},
    {"C_dep(A1B2)", Noise::Depolarizing, Region::AIBII, "9/100", 9.0 / 100.0, false},
    {"C_dep(A2B1)", Noise::Depolarizing, Region::AIIBI, "27/100", 27.0 / 100.0, false},
    {"C_dep(A2B2)", Noise::Depolarizing, Region::AIIBII, "27/100", 27.0 / 100.0, false},
}};

// What the closed-form spectra say the radical coefficient must be:
// 4 p^2 n_b (p^2 n_b for bit flip), n_b = cos^2(eta_b) for B_I, sin^2(eta_b) for B_II.
inline double derived_coefficient(Noise noise, Region region, double p, double eta_b) {
    const double n_b = relativistic::b_in_region_one(region) ? std::cos(eta_b) * std::cos(eta_b)
                                                             : std::sin(eta_b) * std::sin(eta_b);
    return (noise == Noise::BitFlip ? 1.0 : 4.0) * p * p * n_b;
}

// Printed capacity formula evaluated at Alice's eta, decay probability k, and
// an explicit radical coefficient (printed or derived).
inline double capacity(const CapacityFormula& f, double eta, double k, double coefficient) {
    const bool a_one = relativistic::a_in_region_one(f.region);
    const double s2 = std::sin(eta) * std::sin(eta);
    const double c2 = std::cos(eta) * std::cos(eta);
    const double lead = a_one ? s2 : c2;
    const double trig = a_one ? c2 : s2;
    const double kappa = relativistic::b_in_region_one(f.region) ? 0.25 : 0.75;

    switch (f.noise) {
    case Noise::None:
        return lead + kappa + std::sqrt((lead - kappa) * (lead - kappa) + coefficient * trig);
    case Noise::PhaseFlip: {
        const double g = 1.0 - 2.0 * k;
        return lead + kappa +
               std::sqrt((lead - kappa) * (lead - kappa) + coefficient * g * g * g * g * trig);
    }
    case Noise::BitFlip: {
        const double g2 = (1.0 - 2.0 * k) * (1.0 - 2.0 * k);
        return std::sqrt(g2 * (lead + kappa) * (lead + kappa) + coefficient * (1.0 - g2) * (1.0 - g2) * trig) +
               std::sqrt(g2 * (lead - kappa) * (lead - kappa) + coefficient * (1.0 + g2) * (1.0 + g2) * trig);
    }
    case Noise::Depolarizing: {
        const double d = 1.0 - 4.0 * k / 3.0;
        return std::abs(d) *
               (lead + kappa + std::sqrt((lead - kappa) * (lead - kappa) + coefficient * d * d * trig));
    }
    }
    throw DomainError("unknown noise kind");
}

// As printed, coefficient included.
inline double printed_capacity(const CapacityFormula& f, double p, double eta, double k) {
    return capacity(f, eta, k, f.coefficient_at(p));
}

inline constexpr std::array<std::string_view, 5> kBlochTermNames{"a3 (Z.I)", "b3 (I.Z)", "c1 (X.X)",
                                                                 "c2 (Y.Y)", "c3 (Z.Z)"};

// Published Bloch form of a region-pair state, term by term.
inline BlochTwoQubit bloch_form(Region region, Noise noise, double p, double eta_a, double eta_b,
                                double k) {
    const double sa = std::sin(eta_a), ca = std::cos(eta_a);
    const double sb = std::sin(eta_b), cb = std::cos(eta_b);
    const double sa2 = sa * sa, ca2 = ca * ca, sb2 = sb * sb, cb2 = cb * cb;

    BlochTwoQubit r;
    switch (region) {
    case Region::AIBI:
        r = {-sa2, -sb2, p * ca * cb, p * ca * cb, sa2 * sb2 - p * ca2 * cb2};
        break;
    case Region::AIBII:
        r = {-sa2, cb2, p * ca * sb, -p * ca * sb, p * ca2 * sb2 - sa2 * cb2};
        break;
    case Region::AIIBI:
        r = {ca2, -sb2, p * sa * cb, -p * sa * cb, p * sa2 * cb2 - ca2 * sb2};
        break;
    case Region::AIIBII:
        r = {ca2, cb2, p * sa * sb, p * sa * sb, ca2 * cb2 - p * sa2 * sb2};
        break;
    }

    switch (noise) {
    case Noise::None:
        break;
    case Noise::PhaseFlip: {
        const double g2 = (1.0 - 2.0 * k) * (1.0 - 2.0 * k);
        r.c1 *= g2;
        r.c2 *= g2;
        break;
    }
    case Noise::BitFlip: {
        const double g = 1.0 - 2.0 * k;
        r.a3 *= g;
        r.b3 *= g;
        r.c2 *= g * g;
        // Printed with 2p on the first Z.Z term for A_I B_II.
        r.c3 = region == Region::AIBII ? g * g * (2.0 * p * ca2 * sb2 - sa2 * cb2) : g * g * r.c3;
        break;
    }
    case Noise::Depolarizing: {
        const double d = 1.0 - 4.0 * k / 3.0;
        // Printed with squared local factors for A_II B_II.
        const double local = region == Region::AIIBII ? d * d : d;
        r.a3 *= local;
        r.b3 *= local;
        r.c1 *= d * d;
        r.c2 *= d * d;
        r.c3 = region == Region::AIBII ? d * d * (2.0 * p * ca2 * sb2 - sa2 * cb2) : d * d * r.c3;
        break;
    }
    }
    return r;
}

inline std::array<double, 5> terms(const BlochTwoQubit& b) { return {b.a3, b.b3, b.c1, b.c2, b.c3}; }

} // namespace qbcap::analytic::published
