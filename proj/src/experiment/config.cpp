#include "nlwave/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace nlwave::experiment {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ConfigError("config field '" + field + "': " + what);
}

double read_number(const json& j, const std::string& field) {
    if (!j.is_number())
        field_error(field, "expected a number");
    return j.get<double>();
}

std::size_t read_count(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        field_error(field, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

cplx read_complex(const json& j, const std::string& field) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    field_error(field, "expected a number or a [re, im] pair");
}

DataSpec read_data(const json& j, const std::string& field) {
    DataSpec spec;
    if (j.is_string()) {
        spec.preset = j.get<std::string>();
        return spec;
    }
    if (!j.is_object())
        field_error(field, "expected a preset name or an object");
    for (const auto& [key, value] : j.items()) {
        const auto sub = field + "." + key;
        if (key == "preset") {
            if (!value.is_string())
                field_error(sub, "expected a string");
            spec.preset = value.get<std::string>();
        } else if (key == "k") {
            spec.mode = read_count(value, sub);
        } else if (key == "seed") {
            spec.seed = read_count(value, sub);
        } else if (key == "decay") {
            spec.decay = read_number(value, sub);
        } else if (key == "real") {
            if (!value.is_boolean())
                field_error(sub, "expected true or false");
            spec.real_only = value.get<bool>();
        } else if (key == "scale") {
            spec.scale = read_number(value, sub);
        } else if (key == "coefficients") {
            if (!value.is_array())
                field_error(sub, "expected an array");
            spec.preset = "coefficients";
            for (std::size_t i = 0; i < value.size(); ++i)
                spec.coefficients.push_back(read_complex(value[i], sub + "[" + std::to_string(i) + "]"));
        } else {
            field_error(sub, "unknown key");
        }
    }
    return spec;
}

json data_to_json(const DataSpec& d) {
    json j{{"preset", d.preset}, {"scale", d.scale}};
    if (d.preset == "eigenfunction")
        j["k"] = d.mode;
    if (d.preset == "random") {
        j["seed"] = d.seed;
        j["decay"] = d.decay;
        j["real"] = d.real_only;
    }
    if (d.preset == "coefficients") {
        json list = json::array();
        for (const auto& c : d.coefficients)
            list.push_back({c.real(), c.imag()});
        j["coefficients"] = list;
    }
    return j;
}

Kind parse_kind(const std::string& s) {
    if (s == "cauchy") return Kind::Cauchy;
    if (s == "nonlocal") return Kind::Nonlocal;
    if (s == "denominators") return Kind::Denominators;
    if (s == "sweep") return Kind::Sweep;
    if (s == "project") return Kind::Project;
    field_error("kind", "unknown problem kind '" + s + "'");
}

} // namespace

std::string to_string(Kind kind) {
    switch (kind) {
    case Kind::Cauchy: return "cauchy";
    case Kind::Nonlocal: return "nonlocal";
    case Kind::Denominators: return "denominators";
    case Kind::Sweep: return "sweep";
    case Kind::Project: return "project";
    }
    return "unknown";
}

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " +
                          e.what());
    }
    if (!root.is_object())
        throw ConfigError("config: top level must be an object");

    ExperimentConfig cfg;
    if (const char* env = std::getenv(kOutputDirEnv); env && *env)
        cfg.output_dir = env;

    for (const auto& [key, value] : root.items()) {
        if (key == "kind") {
            if (!value.is_string())
                field_error(key, "expected a string");
            cfg.kind = parse_kind(value.get<std::string>());
        } else if (key == "T") {
            cfg.horizon = read_number(value, key);
        } else if (key == "omega") {
            cfg.omegas.clear();
            if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    cfg.omegas.push_back(read_number(value[i], "omega[" + std::to_string(i) + "]"));
            } else {
                cfg.omegas.push_back(read_number(value, key));
            }
        } else if (key == "N") {
            cfg.modes = read_count(value, key);
        } else if (key == "spectrum") {
            if (!value.is_string())
                field_error(key, "expected a string");
            cfg.spectrum = value.get<std::string>();
        } else if (key == "data") {
            if (!value.is_object())
                field_error(key, "expected an object");
            for (const auto& [name, spec] : value.items()) {
                if (name == "a") cfg.a = read_data(spec, "data.a");
                else if (name == "b") cfg.b = read_data(spec, "data.b");
                else if (name == "g") cfg.g = read_data(spec, "data.g");
                else if (name == "f") cfg.f = read_data(spec, "data.f");
                else field_error("data." + name, "unknown datum (expected a, b, g or f)");
            }
        } else if (key == "grid") {
            if (value.is_string()) {
                std::tie(cfg.nx, cfg.nt) = parse_grid(value.get<std::string>());
            } else if (value.is_object()) {
                if (value.contains("nx")) cfg.nx = read_count(value["nx"], "grid.nx");
                if (value.contains("nt")) cfg.nt = read_count(value["nt"], "grid.nt");
            } else {
                field_error(key, "expected \"<nx>x<nt>\" or {nx, nt}");
            }
        } else if (key == "time_points") {
            cfg.time_points = read_count(value, key);
        } else if (key == "quadrature") {
            if (!value.is_object())
                field_error(key, "expected an object");
            if (value.contains("panels")) cfg.quadrature_panels = read_count(value["panels"], "quadrature.panels");
            if (value.contains("nodes")) cfg.quadrature_nodes = read_count(value["nodes"], "quadrature.nodes");
        } else if (key == "output_dir") {
            if (!value.is_string())
                field_error(key, "expected a string");
            cfg.output_dir = value.get<std::string>();
        } else if (key == "tolerances") {
            if (!value.is_object())
                field_error(key, "expected an object");
            for (const auto& [name, v] : value.items()) {
                const auto sub = "tolerances." + name;
                const double x = read_number(v, sub);
                if (name == "verification") cfg.tol.verification = x;
                else if (name == "initial_condition") cfg.tol.initial_condition = x;
                else if (name == "round_trip_coefficients") cfg.tol.round_trip_coefficients = x;
                else if (name == "round_trip_field") cfg.tol.round_trip_field = x;
                else if (name == "energy_drift") cfg.tol.energy_drift = x;
                else if (name == "classification") cfg.tol.classification = x;
                else field_error(sub, "unknown tolerance");
            }
        } else {
            field_error(key, "unknown key");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const ExperimentConfig& cfg) {
    if (!std::isfinite(cfg.horizon) || cfg.horizon <= 0.0)
        field_error("T", "must be positive and finite");
    if (cfg.modes < 1)
        field_error("N", "must be at least 1");
    if (cfg.omegas.empty())
        field_error("omega", "list must not be empty");
    for (double w : cfg.omegas)
        if (!std::isfinite(w))
            field_error("omega", "must be finite");
    if (cfg.nx < 2 || cfg.nt < 2)
        field_error("grid", "needs at least 2 points per axis");
    if (cfg.time_points < 2)
        field_error("time_points", "needs at least 2 points");
    if (cfg.quadrature_panels < 1 || cfg.quadrature_nodes < 1)
        field_error("quadrature", "panels and nodes must be at least 1");
    if (cfg.spectrum != "dirichlet-1d")
        field_error("spectrum", "unsupported spectrum '" + cfg.spectrum + "' (available: dirichlet-1d)");
    for (const auto* t : {&cfg.tol.verification, &cfg.tol.initial_condition, &cfg.tol.round_trip_coefficients,
                          &cfg.tol.round_trip_field, &cfg.tol.energy_drift, &cfg.tol.classification})
        if (!(*t > 0.0))
            field_error("tolerances", "must be positive");
    if ((cfg.kind == Kind::Nonlocal || cfg.kind == Kind::Denominators) && cfg.omegas.size() != 1)
        field_error("omega", "expected a single value for kind " + to_string(cfg.kind));
}

json to_json(const ExperimentConfig& cfg) {
    return json{
        {"kind", to_string(cfg.kind)},
        {"T", cfg.horizon},
        {"omega", cfg.omegas},
        {"N", cfg.modes},
        {"spectrum", cfg.spectrum},
        {"data", {{"a", data_to_json(cfg.a)}, {"b", data_to_json(cfg.b)}, {"g", data_to_json(cfg.g)},
                  {"f", data_to_json(cfg.f)}}},
        {"grid", {{"nx", cfg.nx}, {"nt", cfg.nt}}},
        {"time_points", cfg.time_points},
        {"quadrature", {{"panels", cfg.quadrature_panels}, {"nodes", cfg.quadrature_nodes}}},
        {"output_dir", cfg.output_dir.string()},
        {"tolerances",
         {{"verification", cfg.tol.verification},
          {"initial_condition", cfg.tol.initial_condition},
          {"round_trip_coefficients", cfg.tol.round_trip_coefficients},
          {"round_trip_field", cfg.tol.round_trip_field},
          {"energy_drift", cfg.tol.energy_drift},
          {"classification", cfg.tol.classification}}},
    };
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos)
            throw std::invalid_argument("missing 'x'");
        std::size_t used = 0;
        const auto nx = std::stoul(text.substr(0, x), &used);
        if (used != x)
            throw std::invalid_argument("trailing characters");
        const auto rest = text.substr(x + 1);
        const auto nt = std::stoul(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("trailing characters");
        return {nx, nt};
    } catch (const std::exception&) {
        field_error("grid", "expected <nx>x<nt>, got '" + text + "'");
    }
}

std::vector<double> parse_omega_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            field_error("omega", "cannot parse '" + item + "'");
        }
    }
    if (out.empty())
        field_error("omega", "list must not be empty");
    return out;
}

SpectrumPtr make_spectrum(const std::string& name) {
    if (name == "dirichlet-1d")
        return make_dirichlet_laplacian();
    field_error("spectrum", "unsupported spectrum '" + name + "'");
}

SpectralVector build_data(const DataSpec& spec, const SpectrumPtr& spectrum, std::size_t n,
                          const QuadratureRule& quadrature) {
    const auto domain = spectrum->domain();
    const auto rule = quadrature.resolving(spectrum->frequency(n), domain.length());

    if (spec.preset == "zero")
        return SpectralVector(spectrum, n);
    if (spec.preset == "parabola") {
        // (x - lo)(hi - x), i.e. x(π - x) on (0, π)
        const auto f = [domain](double x) { return cplx((x - domain.lo) * (domain.hi - x)); };
        return project(f, spectrum, n, rule) * cplx(spec.scale);
    }
    if (spec.preset == "eigenfunction") {
        if (spec.mode < 1 || spec.mode > n)
            throw ConfigError("config field 'data.k': eigenfunction index must lie in 1..N");
        std::vector<cplx> c(n);
        c[spec.mode - 1] = spec.scale;
        return {spectrum, std::move(c)};
    }
    if (spec.preset == "random") {
        std::mt19937_64 rng(spec.seed);
        std::normal_distribution<double> normal;
        std::vector<cplx> c(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double re = normal(rng);
            const double im = spec.real_only ? 0.0 : normal(rng);
            c[k - 1] = spec.scale * cplx(re, im) / std::pow(static_cast<double>(k), spec.decay);
        }
        return {spectrum, std::move(c)};
    }
    if (spec.preset == "coefficients") {
        std::vector<cplx> c(n);
        for (std::size_t i = 0; i < std::min(n, spec.coefficients.size()); ++i)
            c[i] = spec.scale * spec.coefficients[i];
        return {spectrum, std::move(c)};
    }
    throw ConfigError("unknown data preset '" + spec.preset +
                      "' (expected zero, parabola, eigenfunction, random or coefficients)");
}

} // namespace nlwave::experiment
