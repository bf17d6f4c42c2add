#pragma once

#include <cmath>
#include <optional>

#include "qbcap/analytic.hpp"
#include "qbcap/battery.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/relativistic.hpp"

namespace qbcap::battery {

enum class ComputationPath { Pipeline, Analytic };

struct CapacityRecord {
    EigenSpectrum spectrum;
    double capacity = 0.0;
    ComputationPath path = ComputationPath::Pipeline;
    // |pipeline - analytic| when the closed form covers the scenario.
    std::optional<double> residual;
};

inline channels::Noise noise_of(const relativistic::Scenario& s) {
    if (!s.channel) {
        return channels::Noise::None;
    }
    switch (s.channel->kind()) {
    case channels::ChannelKind::PhaseFlip:
        return channels::Noise::PhaseFlip;
    case channels::ChannelKind::BitFlip:
        return channels::Noise::BitFlip;
    case channels::ChannelKind::Depolarizing:
        return channels::Noise::Depolarizing;
    }
    throw DomainError("unknown channel kind");
}

// Pipeline evaluation: isometry, partial trace, Kraus map, Jacobi, Z.Z capacity.
inline CapacityRecord evaluate(const relativistic::Scenario& s) {
    const auto rho = relativistic::scenario_state(s, relativistic::Path::Pipeline);
    CapacityRecord rec;
    rec.spectrum = linalg::hermitian_eigenvalues(rho);
    rec.capacity = capacity_zz(rec.spectrum);
    rec.path = ComputationPath::Pipeline;
    const double k = s.channel ? s.channel->k() : 0.0;
    const double closed = analytic::analytic_capacity(s.region, noise_of(s), s.p, s.eta_a.eta(),
                                                      s.eta_b.eta(), k);
    rec.residual = std::abs(rec.capacity - closed);
    return rec;
}

} // namespace qbcap::battery
