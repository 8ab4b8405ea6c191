#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spikebench/models.hpp"

namespace spikebench {

enum class SolverKind { Euler, Rk4 };

const char* to_string(SolverKind kind);
SolverKind solver_kind_from_string(const std::string& name);

struct SimulationConfig {
    double dt = 0.1;
    std::size_t n_steps = 150;
    double input_amplitude = 1.0;  // current injected during an input-spike step

    static SimulationConfig for_model(ModelKind kind);
};

// Model-specific drive amplitudes; tuned so every grid row is responsive
// under both solvers (see README).
double default_input_amplitude(ModelKind kind);

struct MembraneTrace {
    std::vector<double> times;          // t = step * dt
    std::vector<NeuronState> states;    // post-step, post-threshold snapshots
    std::vector<std::uint8_t> spikes;   // 1 where an output spike was registered
};

// One forward-Euler step: state + dt * f(state). HH gates are clamped to
// [0, 1] after the update.
NeuronState euler_step(const ModelSpec& spec, NeuronState state, double i_in, double dt);

// Classical RK4 with slopes k_i = dt * f(.), midpoints at state + 0.5 * k_prev
// and update (k1 + 2 k2 + 2 k3 + k4)/6; the input current is held constant
// across the stages. HH gates clamped after the update.
NeuronState rk4_step(const ModelSpec& spec, NeuronState state, double i_in, double dt);

NeuronState advance(SolverKind solver, const ModelSpec& spec, NeuronState state,
                    double i_in, double dt);

// Drives a neuron from its canonical initial state. For each step,
// i_in = input_amplitude when input_spikes[t] is set, else 0; one solver step;
// then the threshold rule. Throws std::invalid_argument when
// input_spikes.size() != config.n_steps.
MembraneTrace simulate_neuron(const ModelSpec& spec, SolverKind solver,
                              const std::vector<std::uint8_t>& input_spikes,
                              const SimulationConfig& config);

std::size_t count_spikes(const MembraneTrace& trace);

// Trace export, one row per step: t, v, [aux state...], input_spike, output_spike.
std::string format_trace(const MembraneTrace& trace,
                         const std::vector<std::uint8_t>& input_spikes, ModelKind kind);

}  // namespace spikebench
