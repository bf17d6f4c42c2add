#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/analytic.hpp"
#include "qbcap/battery.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/cli/common.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/relativistic.hpp"

namespace qbcap::cli {

using channels::Noise;
using relativistic::Region;

enum class SweepParam { P, EtaA, K };

inline std::string_view to_string(SweepParam p) {
    switch (p) {
    case SweepParam::P:
        return "p";
    case SweepParam::EtaA:
        return "eta_a";
    case SweepParam::K:
        return "k";
    }
    throw DomainError("unknown sweep parameter");
}

inline std::optional<SweepParam> sweep_param_from_string(std::string_view s) {
    if (s == "p") return SweepParam::P;
    if (s == "eta_a" || s == "eta-a") return SweepParam::EtaA;
    if (s == "k") return SweepParam::K;
    return std::nullopt;
}

struct SweepAxis {
    SweepParam param;
    double start;
    double stop;
    std::size_t count;

    std::vector<double> points() const { return linspace(start, stop, count); }
};

// "name:start:stop:count", e.g. "eta_a:0:90deg:51".
inline SweepAxis parse_axis(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? next : next - pos));
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    if (parts.size() != 4) {
        throw DomainError("axis must look like name:start:stop:count, got '" + std::string(text) + "'");
    }
    const auto param = sweep_param_from_string(parts[0]);
    if (!param) {
        throw DomainError("unknown axis parameter '" + std::string(parts[0]) + "' (use p, eta_a or k)");
    }
    const bool angle = *param == SweepParam::EtaA;
    const double start = angle ? parse_angle(parts[1]) : parse_double(parts[1]);
    const double stop = angle ? parse_angle(parts[2]) : parse_double(parts[2]);
    const double count = parse_double(parts[3]);
    if (count != std::floor(count) || count < 0) {
        throw DomainError("axis count must be a non-negative integer");
    }
    return SweepAxis{*param, start, stop, static_cast<std::size_t>(count)};
}

struct SweepSpec {
    std::vector<SweepAxis> axes;
    double p = 0.3;
    double eta_a = 0.0;
    double eta_b = std::numbers::pi / 6.0;
    double k = 0.0;
    std::vector<Region> regions{relativistic::kAllRegions.begin(), relativistic::kAllRegions.end()};
    Noise noise = Noise::None;

    void validate() const {
        if (axes.empty() || axes.size() > 2) {
            throw DomainError("a sweep needs one or two axes");
        }
        if (axes.size() == 2 && axes[0].param == axes[1].param) {
            throw DomainError("sweep axes must be different parameters");
        }
        for (const auto& ax : axes) {
            if (ax.count < 2) {
                throw DomainError("axis count must be at least 2");
            }
            const double hi = ax.param == SweepParam::EtaA ? relativistic::kEtaMax : 1.0;
            for (double v : {ax.start, ax.stop}) {
                if (!(v >= 0.0 && v <= hi)) {
                    throw DomainError("axis " + std::string(to_string(ax.param)) + " range leaves its domain");
                }
            }
        }
        if (regions.empty()) {
            throw DomainError("a sweep needs at least one region");
        }
        if (!(p >= 0.0 && p <= 1.0) || !(k >= 0.0 && k <= 1.0)) {
            throw DomainError("fixed p and k must lie in [0, 1]");
        }
        (void)relativistic::HawkingParam(eta_a);
        (void)relativistic::HawkingParam(eta_b);
    }
};

struct PointCapacity {
    double pipeline;
    double analytic;
    double residual;
};

inline PointCapacity evaluate_point(Region region, Noise noise, double p, double eta_a, double eta_b,
                                    double k) {
    relativistic::Scenario s{
        .region = region,
        .p = p,
        .eta_a = relativistic::HawkingParam(eta_a),
        .eta_b = relativistic::HawkingParam(eta_b),
        .channel = channels::make_channel(noise, k),
    };
    const auto rho = relativistic::scenario_state(s, relativistic::Path::Pipeline);
    const double pipe = battery::capacity_zz(linalg::hermitian_eigenvalues(rho));
    const double closed = analytic::analytic_capacity(region, noise, p, eta_a, eta_b, k);
    return {pipe, closed, std::abs(pipe - closed)};
}

inline std::string sweep_metadata(const SweepSpec& spec) {
    std::ostringstream os;
    os << "# qbcap sweep noise=" << channels::to_string(spec.noise) << " eta_b=" << format_number(spec.eta_b);
    for (SweepParam fixed : {SweepParam::P, SweepParam::EtaA, SweepParam::K}) {
        bool swept = false;
        for (const auto& ax : spec.axes) {
            swept = swept || ax.param == fixed;
        }
        if (!swept) {
            const double v = fixed == SweepParam::P ? spec.p : fixed == SweepParam::EtaA ? spec.eta_a : spec.k;
            os << ' ' << to_string(fixed) << '=' << format_number(v);
        }
    }
    os << " eta_domain=[0," << format_number(relativistic::kEtaMax)
       << "] eta_units=rad eta_above_pi/4=extrapolated_beyond_physical_hawking_range";
    return os.str();
}

// Writes the metadata line, the header row and one row per grid point in
// row-major axis order (first axis slowest).
inline void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
    spec.validate();
    const auto first = spec.axes[0].points();
    const auto second = spec.axes.size() == 2 ? spec.axes[1].points() : std::vector<double>{0.0};
    const std::size_t rows = first.size() * second.size();
    const std::size_t nreg = spec.regions.size();

    std::vector<PointCapacity> results(rows * nreg);
    parallel_for(rows, [&](std::size_t row) {
        double p = spec.p, eta_a = spec.eta_a, k = spec.k;
        auto assign = [&](SweepParam param, double v) {
            switch (param) {
            case SweepParam::P:
                p = v;
                break;
            case SweepParam::EtaA:
                eta_a = v;
                break;
            case SweepParam::K:
                k = v;
                break;
            }
        };
        assign(spec.axes[0].param, first[row / second.size()]);
        if (spec.axes.size() == 2) {
            assign(spec.axes[1].param, second[row % second.size()]);
        }
        for (std::size_t r = 0; r < nreg; ++r) {
            results[row * nreg + r] = evaluate_point(spec.regions[r], spec.noise, p, eta_a, spec.eta_b, k);
        }
    });

    out << sweep_metadata(spec) << '\n';
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
        out << (i ? "," : "") << to_string(spec.axes[i].param);
    }
    for (Region r : spec.regions) {
        const std::string name(relativistic::to_string(r));
        out << ',' << name << "_capacity_pipeline," << name << "_capacity_analytic," << name << "_residual";
    }
    out << '\n';
    for (std::size_t row = 0; row < rows; ++row) {
        out << format_number(first[row / second.size()]);
        if (spec.axes.size() == 2) {
            out << ',' << format_number(second[row % second.size()]);
        }
        for (std::size_t r = 0; r < nreg; ++r) {
            const auto& pc = results[row * nreg + r];
            out << ',' << format_number(pc.pipeline) << ',' << format_number(pc.analytic) << ','
                << format_number(pc.residual);
        }
        out << '\n';
    }
}

inline void write_sweep_file(const SweepSpec& spec, const std::filesystem::path& path) {
    std::ostringstream buffer;
    write_sweep_csv(spec, buffer);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    file << buffer.str();
    if (!file.flush()) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace qbcap::cli
