#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbcap/cli/capacity.hpp"
#include "qbcap/cli/common.hpp"
#include "qbcap/cli/figures.hpp"
#include "qbcap/cli/sweep.hpp"
#include "qbcap/cli/verify.hpp"

namespace {

using namespace qbcap;
using namespace qbcap::cli;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Region parse_region(const std::string& s) {
    if (auto r = relativistic::region_from_string(s)) return *r;
    throw UsageError("unknown region '" + s + "' (use A1B1, A1B2, A2B1 or A2B2)");
}

Noise parse_noise(const std::string& s) {
    if (auto n = channels::noise_from_string(s)) return *n;
    throw UsageError("unknown noise '" + s + "' (use none, pf, bf or dep)");
}

struct PointFlags {
    std::string region = "A1B1";
    std::string noise = "none";
    double p = 0.3;
    std::string eta_a = "0";
    std::string eta_b = "30deg";
    double k = 0.0;
};

void add_point_flags(CLI::App* cmd, PointFlags& f, bool with_region) {
    if (with_region) {
        cmd->add_option("--region", f.region, "Region pair: A1B1, A1B2, A2B1, A2B2")->capture_default_str();
    }
    cmd->add_option("--noise", f.noise, "Local noise on both qubits: none, pf, bf, dep")->capture_default_str();
    cmd->add_option("--p", f.p, "Isotropic state parameter in [0, 1]")->capture_default_str();
    cmd->add_option("--eta-a", f.eta_a, "Alice's mode angle (radians, or e.g. 45deg)")->capture_default_str();
    cmd->add_option("--eta-b", f.eta_b, "Bob's mode angle (radians, or e.g. 30deg)")->capture_default_str();
    cmd->add_option("--k", f.k, "Decay probability in [0, 1]")->capture_default_str();
}

int run_capacity_cmd(const PointFlags& f) {
    relativistic::Scenario s{
        .region = parse_region(f.region),
        .p = f.p,
        .eta_a = relativistic::HawkingParam(parse_angle(f.eta_a)),
        .eta_b = relativistic::HawkingParam(parse_angle(f.eta_b)),
        .channel = channels::make_channel(parse_noise(f.noise), f.k),
    };
    write_capacity(run_capacity(s), std::cout);
    return kExitOk;
}

int run_sweep_cmd(const PointFlags& f, const std::vector<std::string>& axes, const std::vector<std::string>& regions,
                  const std::string& out) {
    SweepSpec spec;
    for (const auto& a : axes) {
        spec.axes.push_back(parse_axis(a));
    }
    spec.p = f.p;
    spec.eta_a = parse_angle(f.eta_a);
    spec.eta_b = parse_angle(f.eta_b);
    spec.k = f.k;
    spec.noise = parse_noise(f.noise);
    if (!regions.empty()) {
        spec.regions.clear();
        for (const auto& r : regions) {
            spec.regions.push_back(parse_region(r));
        }
    }
    spec.validate();
    if (out == "-") {
        write_sweep_csv(spec, std::cout);
    } else {
        write_sweep_file(spec, out);
    }
    return kExitOk;
}

int run_verify_cmd(std::size_t density, const std::vector<std::string>& noise_names, const std::string& json_out) {
    std::vector<Noise> noises;
    for (const auto& n : noise_names) {
        noises.push_back(parse_noise(n));
    }
    if (noises.empty()) {
        noises.assign(channels::kAllNoise.begin(), channels::kAllNoise.end());
    }
    const auto report = run_verify(density, noises);
    write_text(report, std::cout);
    if (!json_out.empty()) {
        const std::string text = to_json(report).dump(2) + "\n";
        if (json_out == "-") {
            std::cout << text;
        } else {
            write_text_file(json_out, text);
        }
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int run_figures_cmd(const std::string& id, const std::string& dir) {
    if (!is_figure_id(id)) {
        throw UsageError("unknown figure id '" + id + "' (use fig1, fig2, fig4, fig5 or fig6)");
    }
    for (const auto& path : write_figure(id, dir)) {
        std::cout << path.string() << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum battery capacity of isotropic two-qubit states near a Schwarzschild black hole"};
    app.require_subcommand(1);

    PointFlags cap_flags;
    auto* cap = app.add_subcommand("capacity", "Evaluate one scenario through both paths");
    add_point_flags(cap, cap_flags, true);

    PointFlags sweep_flags;
    std::vector<std::string> axes;
    std::vector<std::string> regions;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Capacity over a one- or two-axis grid, as CSV");
    add_point_flags(sweep, sweep_flags, false);
    sweep->add_option("--axis", axes, "name:start:stop:count with name in {p, eta_a, k}; give once or twice")
        ->required();
    sweep->add_option("--region", regions, "Region pairs to include (default all)")->delimiter(',');
    sweep->add_option("--out", sweep_out, "Output CSV path, or - for stdout")->required();

    std::size_t density = 25;
    std::vector<std::string> verify_noise;
    std::string json_out;
    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the matrix pipeline");
    verify->add_option("--density", density, "Points per axis of the p x eta_a x k cube")->capture_default_str();
    verify->add_option("--noise", verify_noise, "Noise settings to check (default all)")->delimiter(',');
    verify->add_option("--json", json_out, "Also write the report as JSON to this path, or - for stdout");

    std::string figure_id;
    std::string figure_dir = ".";
    auto* figures = app.add_subcommand("figures", "Write the CSV data behind a figure");
    figures->add_option("--id,id", figure_id, "fig1, fig2, fig4, fig5 or fig6")->required();
    figures->add_option("--out", figure_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cap) return run_capacity_cmd(cap_flags);
        if (*sweep) return run_sweep_cmd(sweep_flags, axes, regions, sweep_out);
        if (*verify) return run_verify_cmd(density, verify_noise, json_out);
        if (*figures) return run_figures_cmd(figure_id, figure_dir);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
