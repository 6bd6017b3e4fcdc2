// Command-line front end for the nonlocal wave solver experiments.

#include "nlwave/errors.hpp"
#include "nlwave/experiment.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace nlwave;
using namespace nlwave::experiment;

namespace {

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::size_t> modes;
    std::optional<double> horizon;
    std::string omega;
    std::optional<double> tol;
    std::string grid;
    std::string preset;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON config file");
    cmd->add_option("--out", o.out, std::string("output directory (default: $") + kOutputDirEnv + " or nlwave-out)");
    cmd->add_option("--N", o.modes, "truncation order");
    cmd->add_option("--T", o.horizon, "time horizon");
    cmd->add_option("--omega", o.omega, "weight frequency, or a comma-separated list for sweep");
    cmd->add_option("--tol", o.tol, "verification tolerance");
    cmd->add_option("--grid", o.grid, "field export grid <nx>x<nt>");
}

ExperimentConfig resolve(const Overrides& o, Kind kind) {
    ExperimentConfig cfg = o.config.empty() ? parse_config("{}") : load_config(o.config);
    if (!o.config.empty() && cfg.kind != kind) {
        // a config written for another subcommand is still usable; the subcommand decides
        std::cerr << "note: config kind '" << to_string(cfg.kind) << "' overridden by subcommand\n";
    }
    cfg.kind = kind;
    if (!o.out.empty())
        cfg.output_dir = o.out;
    if (o.modes)
        cfg.modes = *o.modes;
    if (o.horizon)
        cfg.horizon = *o.horizon;
    if (!o.omega.empty())
        cfg.omegas = parse_omega_list(o.omega);
    if (o.tol)
        cfg.tol.verification = *o.tol;
    if (!o.grid.empty())
        std::tie(cfg.nx, cfg.nt) = parse_grid(o.grid);
    if (!o.preset.empty())
        cfg.f.preset = o.preset;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral solver for wave equations with a nonlocal-in-time integral condition"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Overrides o;
    auto* denominators = app.add_subcommand("denominators", "per-mode denominators and the z(m) diagnostic");
    auto* solve = app.add_subcommand("solve", "solve the nonlocal problem and verify it");
    auto* cauchy = app.add_subcommand("cauchy", "solve the Cauchy problem and check energy conservation");
    auto* sweep = app.add_subcommand("sweep", "stability and separation across a list of omega values");
    auto* project = app.add_subcommand("project", "project a preset function onto the eigenbasis");
    auto* table = app.add_subcommand("reference-table", "reproduce the four reference z(500) values");
    for (auto* cmd : {denominators, solve, cauchy, sweep, project})
        add_common(cmd, o);
    project->add_option("--preset", o.preset, "function preset (parabola, zero, eigenfunction, random)");

    CLI11_PARSE(app, argc, argv);

    try {
        CommandResult result;
        if (*table)
            result = cmd_reference_table(std::cout);
        else if (*denominators)
            result = cmd_denominators(resolve(o, Kind::Denominators), std::cout);
        else if (*solve)
            result = cmd_solve(resolve(o, Kind::Nonlocal), std::cout);
        else if (*cauchy)
            result = cmd_cauchy(resolve(o, Kind::Cauchy), std::cout);
        else if (*sweep)
            result = cmd_sweep(resolve(o, Kind::Sweep), std::cout);
        else if (*project)
            result = cmd_project(resolve(o, Kind::Project), std::cout);
        return result.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const AdmissibilityError& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return kExitSolverError;
    } catch (const IllConditionedModeError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolverError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverError;
    }
}
