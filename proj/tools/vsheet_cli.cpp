#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsheet/acceptance.hpp"
#include "vsheet/dynamics.hpp"
#include "vsheet/errors.hpp"
#include "vsheet/json_io.hpp"
#include "vsheet/observables.hpp"
#include "vsheet/prequant.hpp"
#include "vsheet/stationarity.hpp"

namespace fs = std::filesystem;
using vsheet::format_double;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    int grid_n = 0;  // 0 = keep the preset's grid
};

vsheet::RevolutionSheet load_sheet(const CommonOpts& opts) {
    if (opts.config_path.empty())
        throw vsheet::ContractError("--config <path> is required for this subcommand");
    std::ifstream in(opts.config_path);
    if (!in) throw vsheet::ContractError("cannot open config file " + opts.config_path);
    nlohmann::json doc;
    in >> doc;
    if (opts.grid_n > 0) doc["grid"] = nlohmann::json{{"n", opts.grid_n}};
    return vsheet::sheet_from_json(doc);
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vsheet::Error("cannot write " + path.string());
    out << bytes;
}

int cmd_simulate(const CommonOpts& opts, const vsheet::SimConfig& sim, bool snapshots) {
    const vsheet::RevolutionSheet sheet = load_sheet(opts);
    const vsheet::Trajectory traj = vsheet::simulate(sheet, sim);

    fs::create_directories(opts.out_dir);
    write_file(fs::path(opts.out_dir) / "timeseries.csv", vsheet::trajectory_csv(traj));
    if (snapshots) {
        for (size_t i = 0; i < traj.states.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "snapshot_%06zu.csv", i);
            write_file(fs::path(opts.out_dir) / name, vsheet::snapshot_csv(traj.states[i]));
        }
    } else if (!traj.states.empty()) {
        write_file(fs::path(opts.out_dir) / "snapshot_final.csv",
                   vsheet::snapshot_csv(traj.states.back()));
    }

    std::cout << "steps recorded: " << traj.times.size() << ", t final: "
              << format_double(traj.times.back()) << "\n"
              << "max relative drift: a " << format_double(traj.max_rel_drift.a) << ", h "
              << format_double(traj.max_rel_drift.h) << ", k " << format_double(traj.max_rel_drift.k)
              << "\n";
    for (const auto& w : traj.warnings) std::cout << "warning: " << w << "\n";
    if (traj.truncated) {
        std::cout << "trajectory truncated: " << traj.truncation_reason << "\n";
        return 2;
    }
    return 0;
}

int cmd_observe(const CommonOpts& opts) {
    const auto sheet = load_sheet(opts);
    std::cout << vsheet::to_json(vsheet::observable_set(sheet)).dump(2) << "\n";
    return 0;
}

int cmd_stationary(const CommonOpts& opts) {
    const auto sheet = load_sheet(opts);
    std::cout << vsheet::to_json(vsheet::stationarity_report(sheet)).dump(2) << "\n";
    return 0;
}

int cmd_classify(const CommonOpts& opts) {
    const auto sheet = load_sheet(opts);
    std::cout << vsheet::to_json(vsheet::classify(sheet)).dump(2) << "\n";
    return 0;
}

int cmd_prequant(const CommonOpts& opts) {
    const auto sheet = load_sheet(opts);
    std::cout << vsheet::to_json(vsheet::onsager_feynman(sheet)).dump(2) << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& opts) {
    fs::create_directories(opts.out_dir);
    const auto results = vsheet::run_acceptance(std::cout, opts.out_dir);
    for (const auto& r : results)
        if (!r.passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circle-invariant vortex sheet simulator and analysis toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    vsheet::SimConfig sim;
    std::string rhs = "closed";
    bool snapshots = false;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", opts.config_path, "preset JSON file");
        if (config_required) c->required();
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--grid-n", opts.grid_n, "override the preset's grid size");
    };

    auto* simulate = app.add_subcommand("simulate", "integrate the Hamiltonian flow");
    add_common(simulate, true);
    simulate->add_option("--dt", sim.dt, "time step");
    simulate->add_option("--t-final", sim.t_final, "final time");
    simulate->add_option("--record-every", sim.record_every, "record every k-th step");
    simulate->add_option("--rhs", rhs, "closed | geometric | crosscheck")
        ->check(CLI::IsMember({"closed", "geometric", "crosscheck"}));
    simulate->add_flag("--snapshots", snapshots, "dump a profile CSV per recorded step");

    auto* observe = app.add_subcommand("observe", "print conserved quantities as JSON");
    add_common(observe, true);
    auto* stationary = app.add_subcommand("stationary", "print the stationarity report as JSON");
    add_common(stationary, true);
    auto* classify = app.add_subcommand("classify", "print the component class (m, n, ell) as JSON");
    add_common(classify, true);
    auto* prequant = app.add_subcommand("prequant", "print the prequantization report as JSON");
    add_common(prequant, true);
    auto* verify = app.add_subcommand("verify", "run the built-in acceptance suite");
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    if (rhs == "geometric")
        sim.rhs_mode = vsheet::RhsMode::Geometric;
    else if (rhs == "crosscheck")
        sim.rhs_mode = vsheet::RhsMode::CrossCheck;

    try {
        if (simulate->parsed()) return cmd_simulate(opts, sim, snapshots);
        if (observe->parsed()) return cmd_observe(opts);
        if (stationary->parsed()) return cmd_stationary(opts);
        if (classify->parsed()) return cmd_classify(opts);
        if (prequant->parsed()) return cmd_prequant(opts);
        if (verify->parsed()) return cmd_verify(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
