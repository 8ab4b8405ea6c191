#include "spikebench/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spikebench {

ModelSpec ExperimentConfig::model_spec(ModelKind kind) const {
    switch (kind) {
        case ModelKind::Lif: return lif;
        case ModelKind::Fhn: return fhn;
        case ModelKind::Izh: return izh;
        case ModelKind::Hh: return hh;
    }
    throw std::invalid_argument("bad model kind");
}

double ExperimentConfig::amplitude(ModelKind kind) const {
    switch (kind) {
        case ModelKind::Lif: return amplitude_lif;
        case ModelKind::Fhn: return amplitude_fhn;
        case ModelKind::Izh: return amplitude_izh;
        case ModelKind::Hh: return amplitude_hh;
    }
    throw std::invalid_argument("bad model kind");
}

Grid ExperimentConfig::grid() const { return Grid{n_x, x_min, x_max}; }

void validate(const ExperimentConfig& cfg) {
    // Per-model spec invariants are checked inside each cell so one bad model
    // fails its own cells instead of aborting the grid.
    if (cfg.models.empty() || cfg.solvers.empty() || cfg.functions.empty() || cfg.noise.empty())
        throw std::invalid_argument("config: every selected subset must be non-empty");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("config: dt must be > 0");
    if (cfg.n_t < 1) throw std::invalid_argument("config: nt must be >= 1");
    if (cfg.noise_sigma < 0.0) throw std::invalid_argument("config: noise.sigma must be >= 0");
    validate(cfg.grid());
    validate(cfg.train);
    if (!(cfg.amplitude_lif > 0.0 && cfg.amplitude_fhn > 0.0 && cfg.amplitude_izh > 0.0 &&
          cfg.amplitude_hh > 0.0))
        throw std::invalid_argument("config: amplitudes must be > 0");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for " + key + ": '" + value + "'");
    }
}

}  // namespace

void apply_config_line(ExperimentConfig& cfg, const std::string& raw_key,
                       const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);

    if (key == "models") {
        cfg.models.clear();
        for (const auto& name : split_list(value)) cfg.models.push_back(model_kind_from_string(name));
        return;
    }
    if (key == "solvers") {
        cfg.solvers.clear();
        for (const auto& name : split_list(value)) cfg.solvers.push_back(solver_kind_from_string(name));
        return;
    }
    if (key == "functions") {
        cfg.functions.clear();
        for (const auto& name : split_list(value)) cfg.functions.push_back(target_kind_from_string(name));
        return;
    }
    if (key == "noise") {
        cfg.noise.clear();
        for (const auto& name : split_list(value)) {
            if (name == "off") cfg.noise.push_back(false);
            else if (name == "on") cfg.noise.push_back(true);
            else throw std::invalid_argument("config: noise entries must be off/on, got '" + name + "'");
        }
        return;
    }
    if (key == "nx") { cfg.n_x = static_cast<std::size_t>(to_u64(key, value)); return; }
    if (key == "nt") { cfg.n_t = static_cast<std::size_t>(to_u64(key, value)); return; }
    if (key == "dt") { cfg.dt = to_double(key, value); return; }
    if (key == "seed") { cfg.seed = to_u64(key, value); return; }
    if (key == "x_min") { cfg.x_min = to_double(key, value); return; }
    if (key == "x_max") { cfg.x_max = to_double(key, value); return; }
    if (key == "sine.k") { cfg.sine_k = to_double(key, value); return; }
    if (key == "noise.sigma") { cfg.noise_sigma = to_double(key, value); return; }

    if (key == "lif.rc") { cfg.lif.rc = to_double(key, value); return; }
    if (key == "lif.v_rest") { cfg.lif.v_rest = to_double(key, value); return; }
    if (key == "lif.v_th") { cfg.lif.v_th = to_double(key, value); return; }

    if (key == "fhn.alpha") { cfg.fhn.alpha = to_double(key, value); return; }
    if (key == "fhn.beta") { cfg.fhn.beta = to_double(key, value); return; }
    if (key == "fhn.gamma") { cfg.fhn.gamma = to_double(key, value); return; }
    if (key == "fhn.v_th") { cfg.fhn.v_th = to_double(key, value); return; }
    if (key == "fhn.v_reset") { cfg.fhn.v_reset = to_double(key, value); return; }

    if (key == "izh.a") { cfg.izh.a = to_double(key, value); return; }
    if (key == "izh.b") { cfg.izh.b = to_double(key, value); return; }
    if (key == "izh.c") { cfg.izh.c = to_double(key, value); return; }
    if (key == "izh.d") { cfg.izh.d = to_double(key, value); return; }
    if (key == "izh.v_th") { cfg.izh.v_th = to_double(key, value); return; }
    if (key == "izh.v0") { cfg.izh.v0 = to_double(key, value); return; }
    if (key == "izh.u0") { cfg.izh.u0 = to_double(key, value); return; }

    if (key == "hh.c_m") { cfg.hh.c_m = to_double(key, value); return; }
    if (key == "hh.g_l") { cfg.hh.g_l = to_double(key, value); return; }
    if (key == "hh.g_k") { cfg.hh.g_k = to_double(key, value); return; }
    if (key == "hh.g_na") { cfg.hh.g_na = to_double(key, value); return; }
    if (key == "hh.e_l") { cfg.hh.e_l = to_double(key, value); return; }
    if (key == "hh.e_k") { cfg.hh.e_k = to_double(key, value); return; }
    if (key == "hh.e_na") { cfg.hh.e_na = to_double(key, value); return; }
    if (key == "hh.v_th") { cfg.hh.v_th = to_double(key, value); return; }
    if (key == "hh.v0") { cfg.hh.v0 = to_double(key, value); return; }
    if (key == "hh.n0") { cfg.hh.n0 = to_double(key, value); return; }
    if (key == "hh.m0") { cfg.hh.m0 = to_double(key, value); return; }
    if (key == "hh.h0") { cfg.hh.h0 = to_double(key, value); return; }

    if (key == "amplitude.lif") { cfg.amplitude_lif = to_double(key, value); return; }
    if (key == "amplitude.fhn") { cfg.amplitude_fhn = to_double(key, value); return; }
    if (key == "amplitude.izh") { cfg.amplitude_izh = to_double(key, value); return; }
    if (key == "amplitude.hh") { cfg.amplitude_hh = to_double(key, value); return; }

    if (key == "train.method") { cfg.train.method = train_method_from_string(value); return; }
    if (key == "train.ridge_lambda") { cfg.train.ridge_lambda = to_double(key, value); return; }
    if (key == "train.learning_rate") { cfg.train.learning_rate = to_double(key, value); return; }
    if (key == "train.epochs") { cfg.train.epochs = static_cast<std::size_t>(to_u64(key, value)); return; }

    throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not 'key = value'");
        apply_config_line(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

std::string cell_name(ModelKind model, SolverKind solver, TargetKind fn, bool noisy) {
    std::string name = to_string(model);
    name += '/';
    name += to_string(solver);
    name += '/';
    name += to_string(fn);
    name += '/';
    name += noisy ? "noisy" : "noiseless";
    return name;
}

std::uint64_t cell_seed(std::uint64_t global_seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = h ^ global_seed;
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace spikebench
