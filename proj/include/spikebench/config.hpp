#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spikebench/encode.hpp"
#include "spikebench/models.hpp"
#include "spikebench/network.hpp"
#include "spikebench/solvers.hpp"

namespace spikebench {

// Full experiment-grid configuration: the selected subsets plus every model,
// encoding and training parameter the file/CLI can override.
struct ExperimentConfig {
    std::vector<ModelKind> models = {ModelKind::Lif, ModelKind::Fhn, ModelKind::Izh,
                                     ModelKind::Hh};
    std::vector<SolverKind> solvers = {SolverKind::Euler, SolverKind::Rk4};
    std::vector<TargetKind> functions = {TargetKind::Square, TargetKind::Discontinuity,
                                         TargetKind::Sine};
    std::vector<bool> noise = {false, true};

    std::size_t n_x = 100;
    std::size_t n_t = 150;
    double dt = 0.1;
    std::uint64_t seed = 42;

    LifSpec lif;
    FhnSpec fhn;
    IzhSpec izh;
    HhSpec hh;
    double amplitude_lif = default_input_amplitude(ModelKind::Lif);
    double amplitude_fhn = default_input_amplitude(ModelKind::Fhn);
    double amplitude_izh = default_input_amplitude(ModelKind::Izh);
    double amplitude_hh = default_input_amplitude(ModelKind::Hh);

    double x_min = -1.0;
    double x_max = 1.0;
    double sine_k = 1.2;
    double noise_sigma = 0.1;
    TrainConfig train;

    ModelSpec model_spec(ModelKind kind) const;
    double amplitude(ModelKind kind) const;
    Grid grid() const;
};

void validate(const ExperimentConfig& cfg);

// Flat key-value text: one `key = value` per line, '#' comments. Dotted keys
// address parameters (e.g. "hh.g_na = 120", "amplitude.lif = 12.7",
// "train.ridge_lambda = 0.08"); list keys (models, solvers, functions, noise)
// take comma-separated values. Unknown keys are rejected.
void apply_config_line(ExperimentConfig& cfg, const std::string& key, const std::string& value);
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

// Canonical "model/solver/function/noise" cell name, e.g. "lif/euler/square/noisy".
std::string cell_name(ModelKind model, SolverKind solver, TargetKind fn, bool noisy);

// Stable per-cell seed: FNV-1a of the cell name mixed into the global seed,
// so results do not depend on grid composition or execution order.
std::uint64_t cell_seed(std::uint64_t global_seed, const std::string& name);

}  // namespace spikebench
