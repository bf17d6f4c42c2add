#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbcap/analytic.hpp"
#include "qbcap/battery.hpp"
#include "qbcap/bloch.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/cli/common.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/published.hpp"
#include "qbcap/relativistic.hpp"

namespace qbcap::cli {

using channels::Noise;
using relativistic::Region;

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr std::size_t kErratumPoints = 51;

struct GridPoint {
    Region region;
    Noise noise;
    double p;
    double eta_a;
    double k;
};

struct FormulaFinding {
    std::string label;
    std::string printed_text;
    double printed_coefficient;
    double oracle_coefficient;
    double printed_residual;
    double oracle_residual;

    bool printed_matches() const { return printed_residual < kVerifyTolerance; }
    bool oracle_matches() const { return oracle_residual < kVerifyTolerance; }
    bool erratum() const { return !printed_matches() && oracle_matches(); }
};

struct BlochFinding {
    Region region;
    Noise noise;
    std::string term;
    double max_deviation;
};

struct VerifyReport {
    std::size_t density = 0;
    std::vector<Noise> noises;
    std::size_t grid_points = 0;
    std::size_t scenarios = 0;
    double max_capacity_residual = 0.0;
    double max_eigenvalue_residual = 0.0;
    double max_construction_residual = 0.0;
    double max_trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    double min_capacity = 0.0;
    double max_capacity = 0.0;
    // Points where the labelled {lam2, lam3} are not the two largest, so the
    // labelled capacity differs from the sorted one.
    std::vector<GridPoint> ordering_violations;
    // Points where lam0 <= lam1 <= lam2 <= lam3 fails as labelled.
    std::size_t label_order_breaks = 0;
    std::vector<FormulaFinding> formula_findings;
    std::vector<BlochFinding> bloch_findings;

    bool passed() const {
        return max_capacity_residual <= kVerifyTolerance && max_eigenvalue_residual <= kVerifyTolerance &&
               max_construction_residual <= kVerifyTolerance;
    }
};

namespace detail {

struct PointResult {
    double capacity_residual = 0.0;
    double eigen_residual = 0.0;
    double construction_residual = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    double capacity = 0.0;
    bool pairing = true;
    bool ordering = true;
    std::array<double, 5> bloch_deviation{};
};

inline PointResult check_point(const GridPoint& g, double eta_b) {
    relativistic::Scenario s{
        .region = g.region,
        .p = g.p,
        .eta_a = relativistic::HawkingParam(g.eta_a),
        .eta_b = relativistic::HawkingParam(eta_b),
        .channel = channels::make_channel(g.noise, g.k),
    };
    const auto pipe = relativistic::scenario_state(s, relativistic::Path::Pipeline);
    const auto bloch = relativistic::scenario_state(s, relativistic::Path::Bloch);
    const auto spectrum = linalg::hermitian_eigenvalues(pipe);
    const auto closed = analytic::analytic_eigenvalues(g.region, g.noise, g.p, g.eta_a, eta_b, g.k);

    PointResult r;
    r.capacity = battery::capacity_zz(spectrum);
    r.capacity_residual = std::abs(r.capacity - battery::capacity_zz(closed.sorted));
    for (std::size_t i = 0; i < 4; ++i) {
        r.eigen_residual = std::max(r.eigen_residual, std::abs(spectrum[i] - closed.sorted[i]));
    }
    r.construction_residual = linalg::max_abs_diff(pipe, bloch);
    r.trace_defect = std::abs(pipe.trace() - linalg::Complex{1.0});
    r.min_eigenvalue = spectrum.min();
    r.pairing = closed.pairing_holds;
    r.ordering = closed.ordering_holds;

    const auto printed = analytic::published::terms(
        analytic::published::bloch_form(g.region, g.noise, g.p, g.eta_a, eta_b, g.k));
    const auto actual = analytic::published::terms(BlochTwoQubit::from_matrix(pipe));
    for (std::size_t t = 0; t < 5; ++t) {
        r.bloch_deviation[t] = std::abs(printed[t] - actual[t]);
    }
    return r;
}

inline std::size_t region_index(Region r) {
    return static_cast<std::size_t>(std::find(relativistic::kAllRegions.begin(), relativistic::kAllRegions.end(), r) -
                                    relativistic::kAllRegions.begin());
}

inline std::size_t noise_index(Noise n) {
    return static_cast<std::size_t>(std::find(channels::kAllNoise.begin(), channels::kAllNoise.end(), n) -
                                    channels::kAllNoise.begin());
}

inline double pipeline_capacity(Region region, Noise noise, double p, double eta_a, double eta_b, double k) {
    relativistic::Scenario s{
        .region = region,
        .p = p,
        .eta_a = relativistic::HawkingParam(eta_a),
        .eta_b = relativistic::HawkingParam(eta_b),
        .channel = channels::make_channel(noise, k),
    };
    return battery::capacity_zz(
        linalg::hermitian_eigenvalues(relativistic::scenario_state(s, relativistic::Path::Pipeline)));
}

} // namespace detail

// Holds each printed capacity formula, with its printed and with its derived
// radical coefficient, against the pipeline at p = 0.3, eta_b = pi/6 on a
// points x points grid of (eta_a, k).
inline std::vector<FormulaFinding> scan_capacity_formulas(const std::vector<Noise>& noises,
                                                          std::size_t points = kErratumPoints) {
    namespace pub = analytic::published;
    const auto etas = linspace(0.0, relativistic::kEtaMax, points);
    const auto ks = linspace(0.0, 1.0, points);
    std::vector<FormulaFinding> out;
    for (const auto& f : pub::kCapacityFormulas) {
        if (std::find(noises.begin(), noises.end(), f.noise) == noises.end()) {
            continue;
        }
        const double printed = f.coefficient_at(pub::kReferenceP);
        const double derived = pub::derived_coefficient(f.noise, f.region, pub::kReferenceP, pub::kReferenceEtaB);
        const std::size_t nk = f.noise == Noise::None ? 1 : ks.size();
        std::vector<std::array<double, 2>> worst(etas.size());
        parallel_for(etas.size(), [&](std::size_t i) {
            for (std::size_t j = 0; j < nk; ++j) {
                const double k = ks[j];
                const double oracle = detail::pipeline_capacity(f.region, f.noise, pub::kReferenceP, etas[i],
                                                                pub::kReferenceEtaB, k);
                worst[i][0] = std::max(worst[i][0], std::abs(pub::capacity(f, etas[i], k, printed) - oracle));
                worst[i][1] = std::max(worst[i][1], std::abs(pub::capacity(f, etas[i], k, derived) - oracle));
            }
        });
        FormulaFinding finding{std::string(f.label), std::string(f.coefficient_text), printed, derived, 0.0, 0.0};
        for (const auto& w : worst) {
            finding.printed_residual = std::max(finding.printed_residual, w[0]);
            finding.oracle_residual = std::max(finding.oracle_residual, w[1]);
        }
        out.push_back(finding);
    }
    return out;
}

// Oracle-equivalence run over the cube p x eta_a x k (density points each,
// eta_b = pi/6) for every region and each requested noise setting.
inline VerifyReport run_verify(std::size_t density, std::vector<Noise> noises = {channels::kAllNoise.begin(),
                                                                                  channels::kAllNoise.end()}) {
    if (density < 2) {
        throw DomainError("verify density must be at least 2");
    }
    if (noises.empty()) {
        throw DomainError("verify needs at least one noise setting");
    }
    constexpr double eta_b = std::numbers::pi / 6.0;
    const auto ps = linspace(0.0, 1.0, density);
    const auto etas = linspace(0.0, relativistic::kEtaMax, density);
    const auto ks = linspace(0.0, 1.0, density);

    std::vector<GridPoint> grid;
    grid.reserve(noises.size() * 4 * density * density * density);
    for (Noise n : noises) {
        for (Region r : relativistic::kAllRegions) {
            for (double p : ps) {
                for (double e : etas) {
                    for (double k : ks) {
                        grid.push_back({r, n, p, e, k});
                    }
                }
            }
        }
    }
    std::vector<detail::PointResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { results[i] = detail::check_point(grid[i], eta_b); });

    VerifyReport rep;
    rep.density = density;
    rep.noises = noises;
    rep.grid_points = density * density * density;
    rep.scenarios = noises.size() * 4;
    rep.min_eigenvalue = results.empty() ? 0.0 : results.front().min_eigenvalue;
    rep.min_capacity = results.empty() ? 0.0 : results.front().capacity;
    // [region][noise][term]
    std::array<std::array<std::array<double, 5>, 4>, 4> bloch_worst{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        rep.max_capacity_residual = std::max(rep.max_capacity_residual, r.capacity_residual);
        rep.max_eigenvalue_residual = std::max(rep.max_eigenvalue_residual, r.eigen_residual);
        rep.max_construction_residual = std::max(rep.max_construction_residual, r.construction_residual);
        rep.max_trace_defect = std::max(rep.max_trace_defect, r.trace_defect);
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, r.min_eigenvalue);
        rep.min_capacity = std::min(rep.min_capacity, r.capacity);
        rep.max_capacity = std::max(rep.max_capacity, r.capacity);
        if (!r.pairing) {
            rep.ordering_violations.push_back(grid[i]);
        }
        if (!r.ordering) {
            ++rep.label_order_breaks;
        }
        auto& w = bloch_worst[detail::region_index(grid[i].region)][detail::noise_index(grid[i].noise)];
        for (std::size_t t = 0; t < 5; ++t) {
            w[t] = std::max(w[t], r.bloch_deviation[t]);
        }
    }
    for (Noise n : noises) {
        for (Region r : relativistic::kAllRegions) {
            const auto& w = bloch_worst[detail::region_index(r)][detail::noise_index(n)];
            for (std::size_t t = 0; t < 5; ++t) {
                if (w[t] > kVerifyTolerance) {
                    rep.bloch_findings.push_back(
                        {r, n, std::string(analytic::published::kBlochTermNames[t]), w[t]});
                }
            }
        }
    }
    rep.formula_findings = scan_capacity_formulas(noises);
    return rep;
}

inline std::string describe(const GridPoint& g) {
    return std::string(relativistic::to_string(g.region)) + " " + std::string(channels::to_string(g.noise)) +
           " p=" + format_number(g.p) + " eta_a=" + format_number(g.eta_a) + " k=" + format_number(g.k);
}

inline void write_text(const VerifyReport& rep, std::ostream& os, std::size_t max_listed = 20) {
    auto sci = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return std::string(buf);
    };
    os << "verify: density " << rep.density << ", " << rep.grid_points << " grid points x " << rep.scenarios
       << " scenarios, eta_b = pi/6, noise =";
    for (Noise n : rep.noises) {
        os << ' ' << channels::to_string(n);
    }
    os << '\n';
    os << "  max |capacity pipeline - analytic|     " << sci(rep.max_capacity_residual) << '\n';
    os << "  max |eigenvalue pipeline - analytic|   " << sci(rep.max_eigenvalue_residual) << '\n';
    os << "  max |Bloch-form state - Kraus state|   " << sci(rep.max_construction_residual) << '\n';
    os << "  max |trace - 1|                        " << sci(rep.max_trace_defect) << '\n';
    os << "  min eigenvalue                         " << sci(rep.min_eigenvalue) << '\n';
    os << "  capacity range                         [" << format_number(rep.min_capacity) << ", "
       << format_number(rep.max_capacity) << "]\n";
    os << "  ordering violations                    " << rep.ordering_violations.size() << '\n';
    for (std::size_t i = 0; i < rep.ordering_violations.size() && i < max_listed; ++i) {
        os << "    " << describe(rep.ordering_violations[i]) << '\n';
    }
    if (rep.ordering_violations.size() > max_listed) {
        os << "    ... " << rep.ordering_violations.size() - max_listed << " more\n";
    }
    os << "  labelled order lam0<=lam1<=lam2<=lam3 broken at " << rep.label_order_breaks
       << " points (capacity unaffected unless listed above)\n";

    os << "capacity formulas at p = 0.3, eta_b = pi/6, " << kErratumPoints << " x " << kErratumPoints
       << " (eta_a, k) points:\n";
    for (const auto& f : rep.formula_findings) {
        os << "  " << f.label << ": printed " << f.printed_text << " (" << format_number(f.printed_coefficient)
           << ") residual " << sci(f.printed_residual) << ", oracle coefficient "
           << format_number(f.oracle_coefficient) << " residual " << sci(f.oracle_residual);
        if (f.erratum()) {
            os << "  ERRATUM: oracle matches " << format_number(f.oracle_coefficient) << ", printed does not";
        } else if (!f.printed_matches()) {
            os << "  MISMATCH: neither coefficient matches";
        }
        os << '\n';
    }
    if (!rep.bloch_findings.empty()) {
        os << "published Bloch forms that disagree with the Kraus pipeline:\n";
        for (const auto& b : rep.bloch_findings) {
            os << "  ERRATUM: " << relativistic::to_string(b.region) << ' ' << channels::to_string(b.noise) << ' '
               << b.term << " max deviation " << sci(b.max_deviation) << '\n';
        }
    }
    os << (rep.passed() ? "PASS" : "FAIL") << " (tolerance " << sci(kVerifyTolerance) << ")\n";
}

inline nlohmann::json to_json(const VerifyReport& rep) {
    using nlohmann::json;
    json j;
    j["density"] = rep.density;
    j["noise"] = json::array();
    for (Noise n : rep.noises) {
        j["noise"].push_back(channels::to_string(n));
    }
    j["grid_points"] = rep.grid_points;
    j["scenarios"] = rep.scenarios;
    j["eta_b"] = std::numbers::pi / 6.0;
    j["max_capacity_residual"] = rep.max_capacity_residual;
    j["max_eigenvalue_residual"] = rep.max_eigenvalue_residual;
    j["max_construction_residual"] = rep.max_construction_residual;
    j["max_trace_defect"] = rep.max_trace_defect;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["capacity_range"] = {rep.min_capacity, rep.max_capacity};
    j["label_order_breaks"] = rep.label_order_breaks;
    j["ordering_violations"] = json::array();
    for (const auto& g : rep.ordering_violations) {
        j["ordering_violations"].push_back({{"region", relativistic::to_string(g.region)},
                                            {"noise", channels::to_string(g.noise)},
                                            {"p", g.p},
                                            {"eta_a", g.eta_a},
                                            {"k", g.k}});
    }
    j["capacity_formulas"] = json::array();
    for (const auto& f : rep.formula_findings) {
        j["capacity_formulas"].push_back({{"label", f.label},
                                          {"printed_text", f.printed_text},
                                          {"printed_coefficient", f.printed_coefficient},
                                          {"oracle_coefficient", f.oracle_coefficient},
                                          {"printed_residual", f.printed_residual},
                                          {"oracle_residual", f.oracle_residual},
                                          {"erratum", f.erratum()}});
    }
    j["bloch_form_errata"] = json::array();
    for (const auto& b : rep.bloch_findings) {
        j["bloch_form_errata"].push_back({{"region", relativistic::to_string(b.region)},
                                          {"noise", channels::to_string(b.noise)},
                                          {"term", b.term},
                                          {"max_deviation", b.max_deviation}});
    }
    j["passed"] = rep.passed();
    return j;
}

} // namespace qbcap::cli
