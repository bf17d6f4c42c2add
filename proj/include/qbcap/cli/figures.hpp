#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/analytic.hpp"
#include "qbcap/cli/common.hpp"
#include "qbcap/cli/sweep.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/jacobi.hpp"
#include "qbcap/relativistic.hpp"

namespace qbcap::cli {

inline constexpr std::size_t kFigureGrid = 101;
inline constexpr std::array<std::string_view, 5> kFigureIds{"fig1", "fig2", "fig4", "fig5", "fig6"};

inline bool is_figure_id(std::string_view id) {
    for (auto f : kFigureIds) {
        if (f == id) return true;
    }
    return false;
}

// Capacity figures are sweeps with fixed settings.
inline std::optional<SweepSpec> figure_sweep(std::string_view id, std::size_t grid = kFigureGrid) {
    SweepSpec spec;
    if (id == "fig2") {
        spec.axes = {{SweepParam::P, 0.0, 1.0, grid}, {SweepParam::EtaA, 0.0, relativistic::kEtaMax, grid}};
        spec.regions = {Region::AIBI, Region::AIIBI, Region::AIIBII};
        spec.noise = Noise::None;
        return spec;
    }
    if (id == "fig4" || id == "fig5" || id == "fig6") {
        spec.axes = {{SweepParam::K, 0.0, 1.0, grid}, {SweepParam::EtaA, 0.0, relativistic::kEtaMax, grid}};
        spec.p = 0.3;
        spec.noise = id == "fig4" ? Noise::PhaseFlip : id == "fig5" ? Noise::BitFlip : Noise::Depolarizing;
        return spec;
    }
    return std::nullopt;
}

// Eigenvalue surface of one noiseless region pair over (p, eta_a): the
// pipeline spectrum sorted ascending, then the closed-form labelled values.
inline void write_eigenvalue_csv(Region region, std::ostream& out, std::size_t grid = kFigureGrid) {
    if (grid < 2) {
        throw DomainError("figure grid must be at least 2");
    }
    const double eta_b = std::numbers::pi / 6.0;
    const auto ps = linspace(0.0, 1.0, grid);
    const auto etas = linspace(0.0, relativistic::kEtaMax, grid);
    struct Row {
        linalg::EigenSpectrum sorted;
        std::array<double, 4> labeled;
    };
    std::vector<Row> rows(ps.size() * etas.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double p = ps[i / etas.size()];
        const double eta_a = etas[i % etas.size()];
        relativistic::Scenario s{
            .region = region,
            .p = p,
            .eta_a = relativistic::HawkingParam(eta_a),
            .eta_b = relativistic::HawkingParam(eta_b),
            .channel = std::nullopt,
        };
        rows[i].sorted = linalg::hermitian_eigenvalues(relativistic::scenario_state(s, relativistic::Path::Pipeline));
        rows[i].labeled = analytic::analytic_eigenvalues(region, Noise::None, p, eta_a, eta_b).labeled;
    });

    out << "# qbcap fig1 region=" << relativistic::to_string(region) << " noise=none eta_b=" << format_number(eta_b)
        << " eta_domain=[0," << format_number(relativistic::kEtaMax)
        << "] eta_units=rad eta_above_pi/4=extrapolated_beyond_physical_hawking_range\n";
    out << "p,eta_a,sorted_0,sorted_1,sorted_2,sorted_3,lambda_0,lambda_1,lambda_2,lambda_3\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << format_number(ps[i / etas.size()]) << ',' << format_number(etas[i % etas.size()]);
        for (std::size_t j = 0; j < 4; ++j) {
            out << ',' << format_number(rows[i].sorted[j]);
        }
        for (double v : rows[i].labeled) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    file << text;
    if (!file.flush()) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

// Writes the CSV files of one figure into dir and returns their paths.
inline std::vector<std::filesystem::path> write_figure(std::string_view id, const std::filesystem::path& dir,
                                                       std::size_t grid = kFigureGrid) {
    if (!is_figure_id(id)) {
        throw DomainError("unknown figure id '" + std::string(id) + "' (use fig1, fig2, fig4, fig5 or fig6)");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'");
    }
    std::vector<std::filesystem::path> written;
    if (id == "fig1") {
        for (Region r : relativistic::kAllRegions) {
            std::ostringstream buffer;
            write_eigenvalue_csv(r, buffer, grid);
            const auto path = dir / ("fig1_" + std::string(relativistic::to_string(r)) + ".csv");
            write_text_file(path, buffer.str());
            written.push_back(path);
        }
        return written;
    }
    std::ostringstream buffer;
    write_sweep_csv(*figure_sweep(id, grid), buffer);
    const auto path = dir / (std::string(id) + ".csv");
    write_text_file(path, buffer.str());
    written.push_back(path);
    return written;
}

} // namespace qbcap::cli
