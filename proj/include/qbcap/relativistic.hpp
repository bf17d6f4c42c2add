#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "qbcap/bloch.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/matrix.hpp"

namespace qbcap::relativistic {

using linalg::ComplexMatrix;

inline constexpr double kEtaMax = std::numbers::pi / 2.0;
// eta reachable from a finite temperature stays strictly below this.
inline constexpr double kPhysicalEtaLimit = std::numbers::pi / 4.0;

// T = 1 / (8 pi M), natural units.
inline double hawking_temperature(double mass) {
    if (!(mass > 0.0)) {
        throw DomainError("black-hole mass must be positive");
    }
    return 1.0 / (8.0 * std::numbers::pi * mass);
}

// Mixing angle of the Kruskal vacuum: |0>_K = cos(eta)|00> + sin(eta)|11>.
class HawkingParam {
public:
    struct Provenance {
        double omega;
        double temperature;
    };

    explicit HawkingParam(double eta) : eta_(eta) {
        if (!(eta >= 0.0 && eta <= kEtaMax)) {
            throw DomainError("eta must lie in [0, pi/2], got " + std::to_string(eta));
        }
    }

    HawkingParam(double eta, Provenance from) : HawkingParam(eta) { provenance_ = from; }

    double eta() const noexcept { return eta_; }
    double cos() const noexcept { return std::cos(eta_); }
    double sin() const noexcept { return std::sin(eta_); }
    const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

    // False for eta >= pi/4, which no finite Hawking temperature produces.
    bool physical() const noexcept { return eta_ < kPhysicalEtaLimit; }

private:
    double eta_;
    std::optional<Provenance> provenance_;
};

// sin(eta) = (exp(omega/T) + 1)^(-1/2)
inline HawkingParam eta_from_temperature(double omega, double temperature) {
    if (!(omega > 0.0) || !(temperature > 0.0)) {
        throw DomainError("omega and temperature must both be positive");
    }
    // exp overflows to inf for omega/T > ~709, which correctly yields eta = 0.
    const double s = 1.0 / std::sqrt(std::exp(omega / temperature) + 1.0);
    return HawkingParam(std::asin(s), {omega, temperature});
}

enum class Region { AIBI, AIBII, AIIBI, AIIBII };

inline constexpr std::array<Region, 4> kAllRegions{Region::AIBI, Region::AIBII, Region::AIIBI,
                                                   Region::AIIBII};

inline std::string_view to_string(Region r) {
    switch (r) {
    case Region::AIBI:
        return "A1B1";
    case Region::AIBII:
        return "A1B2";
    case Region::AIIBI:
        return "A2B1";
    case Region::AIIBII:
        return "A2B2";
    }
    throw DomainError("invalid region");
}

inline std::optional<Region> region_from_string(std::string_view s) {
    for (Region r : kAllRegions) {
        if (to_string(r) == s) {
            return r;
        }
    }
    return std::nullopt;
}

inline bool a_in_region_one(Region r) {
    switch (r) {
    case Region::AIBI:
    case Region::AIBII:
        return true;
    case Region::AIIBI:
    case Region::AIIBII:
        return false;
    }
    throw DomainError("invalid region");
}

inline bool b_in_region_one(Region r) {
    switch (r) {
    case Region::AIBI:
    case Region::AIIBI:
        return true;
    case Region::AIBII:
    case Region::AIIBII:
        return false;
    }
    throw DomainError("invalid region");
}

struct Scenario {
    Region region = Region::AIBI;
    double p = 0.3;
    HawkingParam eta_a{0.0};
    HawkingParam eta_b{std::numbers::pi / 6.0};
    std::optional<channels::ChannelSpec> channel;

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
        }
        (void)to_string(region);
    }
};

// rho = 1/4 (I.I + p X.X + p Y.Y - p Z.Z) = (1-p)/4 I + p |psi+><psi+|,
// |psi+> = (|01> + |10>)/sqrt(2).
inline ComplexMatrix isotropic_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
    }
    return BlochTwoQubit{.a3 = 0.0, .b3 = 0.0, .c1 = p, .c2 = p, .c3 = -p}.to_matrix();
}

// 4x2 isometry into (region I, region II):
//   |0> -> cos(eta)|0,0> + sin(eta)|1,1>,   |1> -> |1,0>.
inline ComplexMatrix hawking_isometry(const HawkingParam& eta) {
    ComplexMatrix v(4, 2);
    v(0, 0) = eta.cos();
    v(3, 0) = eta.sin();
    v(2, 1) = 1.0;
    return v;
}

// 16x16 state on (A_I, A_II, B_I, B_II).
inline ComplexMatrix four_partite_state(double p, const HawkingParam& eta_a, const HawkingParam& eta_b) {
    const ComplexMatrix w = linalg::tensor(hawking_isometry(eta_a), hawking_isometry(eta_b));
    return w * isotropic_state(p) * linalg::dagger(w);
}

enum class Path { Pipeline, Bloch };

inline std::array<std::size_t, 2> kept_modes(Region r) {
    return {a_in_region_one(r) ? std::size_t{0} : std::size_t{1},
            b_in_region_one(r) ? std::size_t{2} : std::size_t{3}};
}

namespace detail {

// Single-mode action of the Kruskal map followed by tracing out the partner
// mode, written on the Pauli basis:
//   region I:  I -> I - sin^2 Z,  Z -> cos^2 Z,  X -> cos X,  Y -> cos Y
//   region II: I -> I + cos^2 Z,  Z -> -sin^2 Z, X -> sin X,  Y -> -sin Y
struct ModeMap {
    double identity_to_z;
    double z_to_z;
    double x_to_x;
    double y_to_y;
};

inline ModeMap mode_map(const HawkingParam& eta, bool region_one) {
    const double c = eta.cos();
    const double s = eta.sin();
    if (region_one) {
        return {-s * s, c * c, c, c};
    }
    return {c * c, -s * s, s, -s};
}

} // namespace detail

// Noiseless reduced-state coefficients for a region pair.
inline BlochTwoQubit hawking_bloch(Region region, double p, const HawkingParam& eta_a,
                                   const HawkingParam& eta_b) {
    const auto ma = detail::mode_map(eta_a, a_in_region_one(region));
    const auto mb = detail::mode_map(eta_b, b_in_region_one(region));
    // Input: 1/4 (I.I + p X.X + p Y.Y - p Z.Z).
    return BlochTwoQubit{
        .a3 = ma.identity_to_z,
        .b3 = mb.identity_to_z,
        .c1 = p * ma.x_to_x * mb.x_to_x,
        .c2 = p * ma.y_to_y * mb.y_to_y,
        .c3 = ma.identity_to_z * mb.identity_to_z - p * ma.z_to_z * mb.z_to_z,
    };
}

// Coefficients of the scenario state, channel included when present.
inline BlochTwoQubit bloch_coefficients(const Scenario& s) {
    s.validate();
    const BlochTwoQubit base = hawking_bloch(s.region, s.p, s.eta_a, s.eta_b);
    return s.channel ? channels::bloch_action(*s.channel, base) : base;
}

// Noiseless region-pair state, either by tracing the 16x16 state or from the
// closed-form Bloch coefficients.
inline ComplexMatrix reduced_state(const Scenario& s, Path path) {
    s.validate();
    if (s.channel) {
        throw DomainError("reduced_state takes a noiseless scenario; apply the channel separately");
    }
    if (path == Path::Bloch) {
        return hawking_bloch(s.region, s.p, s.eta_a, s.eta_b).to_matrix();
    }
    const auto keep = kept_modes(s.region);
    constexpr std::array<std::size_t, 4> dims{2, 2, 2, 2};
    return linalg::partial_trace(four_partite_state(s.p, s.eta_a, s.eta_b), std::span<const std::size_t>(keep),
                                 std::span<const std::size_t>(dims));
}

// Reduced state with the scenario's channel applied to both qubits.
inline ComplexMatrix scenario_state(const Scenario& s, Path path) {
    if (path == Path::Bloch) {
        return bloch_coefficients(s).to_matrix();
    }
    Scenario noiseless = s;
    noiseless.channel.reset();
    ComplexMatrix rho = reduced_state(noiseless, Path::Pipeline);
    return s.channel ? channels::apply_channel(rho, *s.channel, channels::Target::Both) : rho;
}

} // namespace qbcap::relativistic
