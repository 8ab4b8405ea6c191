#include "spikebench/solvers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spikebench {

const char* to_string(SolverKind kind) {
    return kind == SolverKind::Euler ? "euler" : "rk4";
}

SolverKind solver_kind_from_string(const std::string& name) {
    if (name == "euler") return SolverKind::Euler;
    if (name == "rk4") return SolverKind::Rk4;
    throw std::invalid_argument("unknown solver kind: " + name);
}

double default_input_amplitude(ModelKind kind) {
    switch (kind) {
        case ModelKind::Lif: return 12.7;
        case ModelKind::Fhn: return 2.0;
        case ModelKind::Izh: return 44.0;
        case ModelKind::Hh: return 32.0;
    }
    return 1.0;
}

SimulationConfig SimulationConfig::for_model(ModelKind kind) {
    SimulationConfig cfg;
    cfg.input_amplitude = default_input_amplitude(kind);
    return cfg;
}

namespace {

void clamp_gates(const ModelSpec& spec, NeuronState& state) {
    if (kind_of(spec) != ModelKind::Hh) return;
    for (std::size_t i = 1; i < 4; ++i)
        state.y[i] = std::clamp(state.y[i], 0.0, 1.0);
}

NeuronState add_scaled(const NeuronState& state, const StateDeriv& k, double factor) {
    NeuronState out = state;
    for (std::size_t i = 0; i < state.dim; ++i) out.y[i] = state.y[i] + factor * k[i];
    return out;
}

void check_positive_dt(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
}

}  // namespace

NeuronState euler_step(const ModelSpec& spec, NeuronState state, double i_in, double dt) {
    check_positive_dt(dt);
    const StateDeriv f = derivative(spec, state, i_in);
    for (std::size_t i = 0; i < state.dim; ++i) state.y[i] += dt * f[i];
    clamp_gates(spec, state);
    return state;
}

NeuronState rk4_step(const ModelSpec& spec, NeuronState state, double i_in, double dt) {
    check_positive_dt(dt);
    StateDeriv k1 = derivative(spec, state, i_in);
    for (std::size_t i = 0; i < state.dim; ++i) k1[i] *= dt;
    StateDeriv k2 = derivative(spec, add_scaled(state, k1, 0.5), i_in);
    for (std::size_t i = 0; i < state.dim; ++i) k2[i] *= dt;
    StateDeriv k3 = derivative(spec, add_scaled(state, k2, 0.5), i_in);
    for (std::size_t i = 0; i < state.dim; ++i) k3[i] *= dt;
    StateDeriv k4 = derivative(spec, add_scaled(state, k3, 1.0), i_in);
    for (std::size_t i = 0; i < state.dim; ++i) k4[i] *= dt;
    for (std::size_t i = 0; i < state.dim; ++i)
        state.y[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) / 6.0;
    clamp_gates(spec, state);
    return state;
}

NeuronState advance(SolverKind solver, const ModelSpec& spec, NeuronState state,
                    double i_in, double dt) {
    return solver == SolverKind::Euler ? euler_step(spec, state, i_in, dt)
                                       : rk4_step(spec, state, i_in, dt);
}

MembraneTrace simulate_neuron(const ModelSpec& spec, SolverKind solver,
                              const std::vector<std::uint8_t>& input_spikes,
                              const SimulationConfig& config) {
    if (input_spikes.size() != config.n_steps)
        throw std::invalid_argument("input_spikes length does not match n_steps");
    check_positive_dt(config.dt);
    if (config.n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");

    MembraneTrace trace;
    trace.times.reserve(config.n_steps);
    trace.states.reserve(config.n_steps);
    trace.spikes.reserve(config.n_steps);

    NeuronState state = initial_state(spec);
    for (std::size_t t = 0; t < config.n_steps; ++t) {
        const double i_in = input_spikes[t] ? config.input_amplitude : 0.0;
        state = advance(solver, spec, state, i_in, config.dt);
        const bool spiked = apply_threshold(spec, state);
        trace.times.push_back(static_cast<double>(t) * config.dt);
        trace.states.push_back(state);
        trace.spikes.push_back(spiked ? 1 : 0);
    }
    return trace;
}

std::size_t count_spikes(const MembraneTrace& trace) {
    std::size_t n = 0;
    for (auto s : trace.spikes) n += s;
    return n;
}

std::string format_trace(const MembraneTrace& trace,
                         const std::vector<std::uint8_t>& input_spikes, ModelKind kind) {
    static const char* aux_names[4][3] = {
        {nullptr, nullptr, nullptr},
        {"w", nullptr, nullptr},
        {"u", nullptr, nullptr},
        {"n", "m", "h"},
    };
    const std::size_t dim = state_dim(kind);
    std::ostringstream os;
    os << "# t v";
    for (std::size_t i = 1; i < dim; ++i) os << ' ' << aux_names[static_cast<int>(kind)][i - 1];
    os << " input_spike output_spike\n";
    for (std::size_t t = 0; t < trace.times.size(); ++t) {
        os << trace.times[t];
        for (std::size_t i = 0; i < dim; ++i) os << ' ' << trace.states[t].y[i];
        os << ' ' << (t < input_spikes.size() ? int(input_spikes[t]) : 0);
        os << ' ' << int(trace.spikes[t]) << '\n';
    }
    return os.str();
}

}  // namespace spikebench
