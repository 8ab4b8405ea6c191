#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spikebench/config.hpp"
#include "spikebench/encode.hpp"
#include "spikebench/experiment.hpp"
#include "spikebench/models.hpp"
#include "spikebench/network.hpp"
#include "spikebench/report.hpp"
#include "spikebench/solvers.hpp"

namespace py = pybind11;
using namespace spikebench;

namespace {

ModelSpec spec_from_kind(const ExperimentConfig& cfg, const std::string& model) {
    return cfg.model_spec(model_kind_from_string(model));
}

std::vector<double> state_vec(const NeuronState& st) {
    return {st.y.begin(), st.y.begin() + st.dim};
}

NeuronState state_from_vec(const ModelSpec& spec, const std::vector<double>& y) {
    NeuronState st = initial_state(spec);
    if (y.size() != st.dim) throw std::invalid_argument("state dimension mismatch");
    for (std::size_t i = 0; i < st.dim; ++i) st.y[i] = y[i];
    return st;
}

SpikeRaster raster_from_rows(const std::vector<std::vector<std::uint8_t>>& rows) {
    SpikeRaster r;
    r.n_x = rows.size();
    r.n_t = rows.empty() ? 0 : rows[0].size();
    r.data.reserve(r.n_x * r.n_t);
    for (const auto& row : rows) {
        if (row.size() != r.n_t) throw std::invalid_argument("ragged raster rows");
        r.data.insert(r.data.end(), row.begin(), row.end());
    }
    return r;
}

std::vector<std::vector<std::uint8_t>> raster_rows(const SpikeRaster& r) {
    std::vector<std::vector<std::uint8_t>> rows(r.n_x);
    for (std::size_t j = 0; j < r.n_x; ++j)
        rows[j] = {r.data.begin() + j * r.n_t, r.data.begin() + (j + 1) * r.n_t};
    return rows;
}

ExperimentConfig config_from_dict(const py::dict& overrides) {
    ExperimentConfig cfg;
    for (const auto& item : overrides)
        apply_config_line(cfg, py::str(item.first).cast<std::string>(),
                          py::str(item.second).cast<std::string>());
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_spikebench, m) {
    m.doc() = "spiking-neuron regression benchmark core";
    m.attr("__version__") = "0.1.0";

    m.def("model_kinds", [] {
        return std::vector<std::string>{"lif", "fhn", "izh", "hh"};
    });

    m.def(
        "hh_rate_constants",
        [](double v_m, double v0) {
            const RateConstants r = hh_rate_constants(v_m, v0);
            py::dict d;
            d["alpha_n"] = r.alpha_n;
            d["beta_n"] = r.beta_n;
            d["alpha_m"] = r.alpha_m;
            d["beta_m"] = r.beta_m;
            d["alpha_h"] = r.alpha_h;
            d["beta_h"] = r.beta_h;
            return d;
        },
        py::arg("v_m"), py::arg("v0") = -65.0);

    m.def(
        "initial_state",
        [](const std::string& model, const py::dict& overrides) {
            return state_vec(initial_state(spec_from_kind(config_from_dict(overrides), model)));
        },
        py::arg("model"), py::arg("overrides") = py::dict());

    m.def(
        "derivative",
        [](const std::string& model, const std::vector<double>& state, double i_in,
           const py::dict& overrides) {
            const ModelSpec spec = spec_from_kind(config_from_dict(overrides), model);
            const NeuronState st = state_from_vec(spec, state);
            const StateDeriv d = derivative(spec, st, i_in);
            return std::vector<double>{d.begin(), d.begin() + st.dim};
        },
        py::arg("model"), py::arg("state"), py::arg("i_in"), py::arg("overrides") = py::dict());

    m.def(
        "step",
        [](const std::string& model, const std::string& solver, const std::vector<double>& state,
           double i_in, double dt, const py::dict& overrides) {
            const ModelSpec spec = spec_from_kind(config_from_dict(overrides), model);
            const NeuronState st = state_from_vec(spec, state);
            return state_vec(advance(solver_kind_from_string(solver), spec, st, i_in, dt));
        },
        py::arg("model"), py::arg("solver"), py::arg("state"), py::arg("i_in"), py::arg("dt"),
        py::arg("overrides") = py::dict());

    m.def(
        "simulate_neuron",
        [](const std::string& model, const std::string& solver,
           const std::vector<std::uint8_t>& input_spikes, double dt, double amplitude,
           const py::dict& overrides) {
            const ExperimentConfig cfg = config_from_dict(overrides);
            const ModelKind kind = model_kind_from_string(model);
            SimulationConfig sim;
            sim.dt = dt;
            sim.n_steps = input_spikes.size();
            sim.input_amplitude = amplitude > 0.0 ? amplitude : cfg.amplitude(kind);
            const MembraneTrace trace =
                simulate_neuron(cfg.model_spec(kind), solver_kind_from_string(solver),
                                input_spikes, sim);
            py::dict d;
            d["times"] = trace.times;
            std::vector<std::vector<double>> states;
            states.reserve(trace.states.size());
            for (const auto& st : trace.states) states.push_back(state_vec(st));
            d["states"] = states;
            d["spikes"] = trace.spikes;
            return d;
        },
        py::arg("model"), py::arg("solver"), py::arg("input_spikes"), py::arg("dt") = 0.1,
        py::arg("amplitude") = 0.0, py::arg("overrides") = py::dict());

    m.def(
        "evaluate_target",
        [](const std::string& fn, double x, double k) {
            return evaluate_target({target_kind_from_string(fn), k}, x);
        },
        py::arg("fn"), py::arg("x"), py::arg("k") = 1.2);

    m.def(
        "encode_spike_train",
        [](double x, std::size_t n_t, double x_min, double x_max) {
            Grid grid{100, x_min, x_max};
            return encode_spike_train(x, grid, n_t);
        },
        py::arg("x"), py::arg("n_t") = 150, py::arg("x_min") = -1.0, py::arg("x_max") = 1.0);

    m.def(
        "encode_all",
        [](std::size_t n_x, std::size_t n_t, double x_min, double x_max) {
            Grid grid{n_x, x_min, x_max};
            return raster_rows(encode_all(grid, n_t).raster);
        },
        py::arg("n_x") = 100, py::arg("n_t") = 150, py::arg("x_min") = -1.0,
        py::arg("x_max") = 1.0);

    m.def(
        "train_synapse",
        [](const std::vector<std::vector<std::uint8_t>>& raster,
           const std::vector<double>& targets, const std::string& method, double ridge_lambda,
           double learning_rate, std::size_t epochs) {
            TrainConfig cfg;
            cfg.method = train_method_from_string(method);
            cfg.ridge_lambda = ridge_lambda;
            cfg.learning_rate = learning_rate;
            cfg.epochs = epochs;
            const SynapseWeights w = train_synapse(raster_from_rows(raster), targets, cfg);
            py::dict d;
            d["w"] = w.w;
            d["bias"] = w.bias;
            return d;
        },
        py::arg("raster"), py::arg("targets"), py::arg("method") = "ridge",
        py::arg("ridge_lambda") = TrainConfig{}.ridge_lambda, py::arg("learning_rate") = 1e-3,
        py::arg("epochs") = 2000);

    m.def(
        "predict",
        [](const std::vector<double>& w, double bias,
           const std::vector<std::vector<std::uint8_t>>& raster) {
            return predict(SynapseWeights{w, bias}, raster_from_rows(raster));
        },
        py::arg("w"), py::arg("bias"), py::arg("raster"));

    m.def(
        "l2_error",
        [](const std::vector<double>& pred, const std::vector<double>& exact) {
            return l2_error(pred, exact);
        },
        py::arg("y_pred"), py::arg("y_exact"));

    m.def(
        "run_regression",
        [](const std::string& model, const std::string& solver, const std::string& fn, bool noisy,
           const py::dict& overrides) {
            const ExperimentConfig cfg = config_from_dict(overrides);
            const ModelKind kind = model_kind_from_string(model);
            const CellResult cell = run_cell(cfg, kind, solver_kind_from_string(solver),
                                             target_kind_from_string(fn), noisy);
            if (!cell.ok()) throw std::runtime_error(cell.error);
            py::dict d;
            d["l2_sum"] = cell.l2_sum;
            d["l2_relative"] = cell.l2_relative;
            d["output_spike_count"] = cell.output_spike_count;
            d["sim_time_s"] = cell.sim_time;
            d["train_time_s"] = cell.train_time;
            return d;
        },
        py::arg("model"), py::arg("solver"), py::arg("fn"), py::arg("noisy") = false,
        py::arg("overrides") = py::dict());

    m.def(
        "run_grid_json",
        [](const py::dict& overrides) { return render_json(run_grid(config_from_dict(overrides))); },
        py::arg("overrides") = py::dict());
}
