#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/bloch.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/matrix.hpp"

namespace qbcap::channels {

enum class ChannelKind { PhaseFlip, BitFlip, Depolarizing };

inline std::string_view to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::PhaseFlip:
        return "pf";
    case ChannelKind::BitFlip:
        return "bf";
    case ChannelKind::Depolarizing:
        return "dep";
    }
    throw DomainError("unknown channel kind");
}

inline std::optional<ChannelKind> channel_kind_from_string(std::string_view s) {
    if (s == "pf") return ChannelKind::PhaseFlip;
    if (s == "bf") return ChannelKind::BitFlip;
    if (s == "dep") return ChannelKind::Depolarizing;
    return std::nullopt;
}

// Channel kind plus decay probability k in [0, 1].
class ChannelSpec {
public:
    ChannelSpec(ChannelKind kind, double k) : kind_(kind), k_(k) {
        if (!(k >= 0.0 && k <= 1.0)) {
            throw DomainError("decay probability k must lie in [0, 1], got " + std::to_string(k));
        }
    }

    ChannelKind kind() const noexcept { return kind_; }
    double k() const noexcept { return k_; }

    friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;

private:
    ChannelKind kind_;
    double k_;
};

enum class Target { QubitA, QubitB, Both };

// Channel selector including the noiseless case.
enum class Noise { None, PhaseFlip, BitFlip, Depolarizing };

inline constexpr std::array<Noise, 4> kAllNoise{Noise::None, Noise::PhaseFlip, Noise::BitFlip,
                                                Noise::Depolarizing};

inline std::string_view to_string(Noise n) {
    switch (n) {
    case Noise::None:
        return "none";
    case Noise::PhaseFlip:
        return "pf";
    case Noise::BitFlip:
        return "bf";
    case Noise::Depolarizing:
        return "dep";
    }
    throw DomainError("unknown noise kind");
}

inline std::optional<Noise> noise_from_string(std::string_view s) {
    for (Noise n : kAllNoise) {
        if (to_string(n) == s) {
            return n;
        }
    }
    return std::nullopt;
}

// The channel for a noise setting, or nullopt when noiseless (k is ignored then).
inline std::optional<ChannelSpec> make_channel(Noise n, double k) {
    switch (n) {
    case Noise::None:
        return std::nullopt;
    case Noise::PhaseFlip:
        return ChannelSpec(ChannelKind::PhaseFlip, k);
    case Noise::BitFlip:
        return ChannelSpec(ChannelKind::BitFlip, k);
    case Noise::Depolarizing:
        return ChannelSpec(ChannelKind::Depolarizing, k);
    }
    throw DomainError("unknown noise kind");
}

inline std::vector<linalg::ComplexMatrix> kraus_operators(const ChannelSpec& spec) {
    using namespace linalg;
    const double k = spec.k();
    const double keep = std::sqrt(1.0 - k);
    switch (spec.kind()) {
    case ChannelKind::PhaseFlip:
        return {keep * pauli::identity(), std::sqrt(k) * pauli::z()};
    case ChannelKind::BitFlip:
        return {keep * pauli::identity(), std::sqrt(k) * pauli::x()};
    case ChannelKind::Depolarizing: {
        const double w = std::sqrt(k / 3.0);
        return {keep * pauli::identity(), w * pauli::x(), w * pauli::y(), w * pauli::z()};
    }
    }
    throw DomainError("unknown channel kind");
}

// Factors multiplying sigma_1, sigma_2, sigma_3 under one application of the
// channel to a single qubit.
inline std::array<double, 3> pauli_factors(const ChannelSpec& spec) {
    const double k = spec.k();
    switch (spec.kind()) {
    case ChannelKind::PhaseFlip:
        return {1.0 - 2.0 * k, 1.0 - 2.0 * k, 1.0};
    case ChannelKind::BitFlip:
        return {1.0, 1.0 - 2.0 * k, 1.0 - 2.0 * k};
    case ChannelKind::Depolarizing:
        return {1.0 - 4.0 * k / 3.0, 1.0 - 4.0 * k / 3.0, 1.0 - 4.0 * k / 3.0};
    }
    throw DomainError("unknown channel kind");
}

namespace detail {

inline linalg::ComplexMatrix kraus_sum(const linalg::ComplexMatrix& rho,
                                       const std::vector<linalg::ComplexMatrix>& ops) {
    linalg::ComplexMatrix out(rho.rows());
    for (const auto& e : ops) {
        out += e * rho * linalg::dagger(e);
    }
    return out;
}

inline std::vector<linalg::ComplexMatrix> lift(const std::vector<linalg::ComplexMatrix>& ops,
                                               bool on_first) {
    std::vector<linalg::ComplexMatrix> out;
    out.reserve(ops.size());
    const auto id = linalg::pauli::identity();
    for (const auto& e : ops) {
        out.push_back(on_first ? linalg::tensor(e, id) : linalg::tensor(id, e));
    }
    return out;
}

} // namespace detail

// rho' = sum_i E_i rho E_i^dagger with the single-qubit operators lifted to
// E.I (qubit A), I.E (qubit B), or both in sequence with the same k.
inline linalg::ComplexMatrix apply_channel(const linalg::ComplexMatrix& rho, const ChannelSpec& spec,
                                           Target target = Target::Both) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw DensityMatrixError("apply_channel expects a two-qubit (4x4) density matrix");
    }
    linalg::validate_density(rho);
    const auto ops = kraus_operators(spec);
    switch (target) {
    case Target::QubitA:
        return detail::kraus_sum(rho, detail::lift(ops, true));
    case Target::QubitB:
        return detail::kraus_sum(rho, detail::lift(ops, false));
    case Target::Both:
        return detail::kraus_sum(detail::kraus_sum(rho, detail::lift(ops, false)),
                                 detail::lift(ops, true));
    }
    throw DomainError("unknown channel target");
}

// Same channel on both qubits, expressed on the Bloch coefficients: every
// Pauli factor picks up its single-qubit scaling, so two-qubit terms get
// the product of two factors.
inline BlochTwoQubit bloch_action(const ChannelSpec& spec, const BlochTwoQubit& in) {
    const auto [fx, fy, fz] = pauli_factors(spec);
    return BlochTwoQubit{
        .a3 = fz * in.a3,
        .b3 = fz * in.b3,
        .c1 = fx * fx * in.c1,
        .c2 = fy * fy * in.c2,
        .c3 = fz * fz * in.c3,
    };
}

} // namespace qbcap::channels
