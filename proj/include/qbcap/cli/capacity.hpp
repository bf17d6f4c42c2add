#pragma once

#include <cmath>
#include <ostream>

#include "qbcap/analytic.hpp"
#include "qbcap/battery.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/cli/common.hpp"
#include "qbcap/evaluate.hpp"
#include "qbcap/relativistic.hpp"

namespace qbcap::cli {

struct CapacityResult {
    relativistic::Scenario scenario;
    battery::CapacityRecord pipeline;
    double analytic = 0.0;
    double residual = 0.0;
    bool physical = true;
};

inline CapacityResult run_capacity(const relativistic::Scenario& s) {
    s.validate();
    CapacityResult r{s, battery::evaluate(s)};
    const double k = s.channel ? s.channel->k() : 0.0;
    r.analytic = analytic::analytic_capacity(s.region, battery::noise_of(s), s.p, s.eta_a.eta(), s.eta_b.eta(), k);
    r.residual = std::abs(r.pipeline.capacity - r.analytic);
    r.physical = s.eta_a.physical() && s.eta_b.physical();
    return r;
}

inline void write_capacity(const CapacityResult& r, std::ostream& os) {
    const auto& s = r.scenario;
    os << "region " << relativistic::to_string(s.region) << '\n';
    os << "noise " << channels::to_string(battery::noise_of(s));
    if (s.channel) {
        os << " k=" << format_number(s.channel->k());
    }
    os << '\n';
    os << "p " << format_number(s.p) << '\n';
    os << "eta_a " << format_number(s.eta_a.eta()) << '\n';
    os << "eta_b " << format_number(s.eta_b.eta()) << '\n';
    os << "eigenvalues";
    for (double v : r.pipeline.spectrum.values()) {
        os << ' ' << format_number(v);
    }
    os << '\n';
    os << "capacity " << format_fixed(r.pipeline.capacity) << '\n';
    os << "capacity_pipeline " << format_number(r.pipeline.capacity) << '\n';
    os << "capacity_analytic " << format_number(r.analytic) << '\n';
    os << "residual " << format_number(r.residual) << '\n';
    os << "physical_range " << (r.physical ? "yes" : "no (extrapolated beyond physical Hawking range)") << '\n';
}

} // namespace qbcap::cli
