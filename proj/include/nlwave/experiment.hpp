#pragma once

#include "nlwave/errors.hpp"
#include "nlwave/quadrature.hpp"
#include "nlwave/spectral_basis.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nlwave::experiment {

inline constexpr const char* kVersion = "0.1.0";
/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "NLWAVE_OUT_DIR";

/// Process exit codes of the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
    kExitSolverError = 4,
};

/// Invalid configuration; names the offending field or the line of a syntax error.
class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

enum class Kind { Cauchy, Nonlocal, Denominators, Sweep, Project };

std::string to_string(Kind kind);

/// How a datum (a, b, g or f) is specified.
struct DataSpec {
    /// zero | parabola | eigenfunction | random | coefficients
    std::string preset = "zero";
    /// mode index for the eigenfunction preset
    std::size_t mode = 1;
    /// random preset: c_k = scale (X_k + iY_k) / k^decay, X, Y ~ N(0, 1)
    std::uint64_t seed = 1;
    double decay = 2.0;
    bool real_only = false;
    double scale = 1.0;
    /// coefficients preset, c_1..c_M (zero-padded or truncated to N)
    std::vector<cplx> coefficients;
};

inline DataSpec parabola_spec() {
    DataSpec d;
    d.preset = "parabola";
    return d;
}

struct Tolerances {
    /// integral-condition and real-system residuals, relative to 1 + ‖g‖
    double verification = 1e-8;
    double initial_condition = 1e-14;
    double round_trip_coefficients = 1e-10;
    double round_trip_field = 1e-9;
    double energy_drift = 1e-12;
    double classification = 1e-9;
};

struct ExperimentConfig {
    Kind kind = Kind::Nonlocal;
    double horizon = 5.0;
    std::vector<double> omegas{0.01};
    std::size_t modes = 100;
    std::string spectrum = "dirichlet-1d";
    DataSpec a;
    DataSpec b;
    DataSpec g = parabola_spec();
    DataSpec f = parabola_spec();
    std::size_t nx = 201;
    std::size_t nt = 201;
    std::size_t time_points = 1001;
    std::size_t quadrature_panels = QuadratureRule::kDefaultPanels;
    std::size_t quadrature_nodes = QuadratureRule::kDefaultNodes;
    std::filesystem::path output_dir = "nlwave-out";
    Tolerances tol;

    double omega() const { return omegas.front(); }
    QuadratureRule quadrature() const { return {quadrature_panels, quadrature_nodes}; }
};

/// Parses a JSON config. Missing keys keep their defaults.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Throws ConfigError on out-of-range values (T > 0, N >= 1, grid sizes, kind-specific rules).
void validate(const ExperimentConfig& config);
nlohmann::json to_json(const ExperimentConfig& config);

/// Parses "201x101".
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text);
/// Parses "0.3,0.1,0.01".
std::vector<double> parse_omega_list(const std::string& text);

SpectrumPtr make_spectrum(const std::string& name);
/// Coefficients of a datum; analytic presets are projected with a rule refined for mode n.
SpectralVector build_data(const DataSpec& spec, const SpectrumPtr& spectrum, std::size_t n,
                          const QuadratureRule& quadrature);

struct Check {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
};

struct RunManifest {
    nlohmann::json config;
    std::string command;
    std::string version = kVersion;
    std::string started_at;
    double wall_seconds = 0.0;
    std::vector<std::string> files;
    std::vector<Check> checks;

    nlohmann::json to_json() const;
};

struct CommandResult {
    int exit_code = kExitOk;
    RunManifest manifest;
};

CommandResult cmd_denominators(const ExperimentConfig& config, std::ostream& out);
CommandResult cmd_solve(const ExperimentConfig& config, std::ostream& out);
CommandResult cmd_cauchy(const ExperimentConfig& config, std::ostream& out);
CommandResult cmd_sweep(const ExperimentConfig& config, std::ostream& out);
CommandResult cmd_project(const ExperimentConfig& config, std::ostream& out);

struct ReferenceCell {
    double horizon = 0.0;
    double omega = 0.0;
    double expected = 0.0;
    double measured = 0.0;
    double relative_error = 0.0;
    bool passed = false;
};

inline constexpr double kReferenceTableTolerance = 0.02;
inline constexpr std::size_t kReferenceTableModes = 500;

/// z(500) for the four reference (T, ω) cells, each compared at 2 % relative tolerance.
std::vector<ReferenceCell> reference_table();
CommandResult cmd_reference_table(std::ostream& out);

/// "3.660e-9": d significant digits, exponent without padding.
std::string short_scientific(double value, int digits = 4);

} // namespace nlwave::experiment
