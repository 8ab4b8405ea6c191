#include "spikebench/experiment.hpp"

#include <sstream>
#include <stdexcept>

namespace spikebench {

bool ExperimentReport::all_ok() const {
    for (const auto& c : cells)
        if (!c.ok()) return false;
    return true;
}

CellResult run_cell(const ExperimentConfig& cfg, ModelKind model, SolverKind solver,
                    TargetKind fn, bool noisy) {
    CellResult cell;
    cell.model = model;
    cell.solver = solver;
    cell.function = fn;
    cell.noisy = noisy;
    try {
        const ModelSpec spec = cfg.model_spec(model);
        SimulationConfig sim_cfg;
        sim_cfg.dt = cfg.dt;
        sim_cfg.n_steps = cfg.n_t;
        sim_cfg.input_amplitude = cfg.amplitude(model);

        NoiseSpec noise;
        noise.sigma = cfg.noise_sigma;
        noise.enabled = noisy;
        noise.seed = cell_seed(cfg.seed, cell.name());

        TargetFunction target{fn, cfg.sine_k};
        const RegressionResult res =
            run_regression(spec, solver, target, cfg.grid(), noise, sim_cfg, cfg.train);
        cell.l2_sum = res.l2_sum;
        cell.l2_relative = res.l2_relative;
        cell.output_spike_count = res.output_spike_count;
        cell.sim_time = res.sim_time;
        cell.train_time = res.train_time;
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

ExperimentReport run_grid(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentReport report;
    report.seed = cfg.seed;
    report.version = "0.1.0";
    {
        std::ostringstream os;
        os << "nx=" << cfg.n_x << " nt=" << cfg.n_t << " dt=" << cfg.dt
           << " lambda=" << cfg.train.ridge_lambda << " trainer=" << to_string(cfg.train.method);
        report.config_summary = os.str();
    }
    for (auto model : cfg.models)
        for (auto solver : cfg.solvers)
            for (auto fn : cfg.functions)
                for (bool noisy : cfg.noise)
                    report.cells.push_back(run_cell(cfg, model, solver, fn, noisy));
    return report;
}

DriveSpec DriveSpec::parse(const std::string& text) {
    DriveSpec spec;
    const auto next = [&text](std::size_t from) {
        const auto pos = text.find(':', from);
        return pos == std::string::npos ? text.size() : pos;
    };
    const std::size_t p0 = next(0);
    const std::string head = text.substr(0, p0);
    try {
        if (head == "constant") {
            spec.pattern = DrivePattern::Constant;
            if (p0 < text.size()) spec.amplitude = std::stod(text.substr(p0 + 1));
        } else if (head == "burst") {
            spec.pattern = DrivePattern::Burst;
            const std::size_t p1 = next(p0 + 1);
            if (p0 >= text.size() || p1 >= text.size())
                throw std::invalid_argument("burst drive needs start and length");
            spec.burst_start = std::stoull(text.substr(p0 + 1, p1 - p0 - 1));
            spec.burst_len = std::stoull(text.substr(p1 + 1));
        } else if (head == "encode") {
            spec.pattern = DrivePattern::Encode;
            if (p0 >= text.size()) throw std::invalid_argument("encode drive needs a location");
            spec.encode_x = std::stod(text.substr(p0 + 1));
        } else {
            throw std::invalid_argument("unknown drive pattern");
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad drive spec '" + text +
                                    "' (expected constant:<amp>|burst:<start>:<len>|encode:<x>)");
    }
    return spec;
}

std::string trace_demo(const ExperimentConfig& cfg, ModelKind model, SolverKind solver,
                       const DriveSpec& drive) {
    const ModelSpec spec = cfg.model_spec(model);
    validate(spec);
    SimulationConfig sim_cfg;
    sim_cfg.dt = cfg.dt;
    sim_cfg.n_steps = cfg.n_t;
    sim_cfg.input_amplitude = cfg.amplitude(model);

    std::vector<std::uint8_t> input(cfg.n_t, 0);
    switch (drive.pattern) {
        case DrivePattern::Constant:
            if (drive.amplitude > 0.0) sim_cfg.input_amplitude = drive.amplitude;
            std::fill(input.begin(), input.end(), 1);
            break;
        case DrivePattern::Burst: {
            if (drive.burst_start >= cfg.n_t)
                throw std::invalid_argument("trace: burst start beyond n_t");
            const std::size_t end = std::min(cfg.n_t, drive.burst_start + drive.burst_len);
            std::fill(input.begin() + drive.burst_start, input.begin() + end, 1);
            break;
        }
        case DrivePattern::Encode:
            input = encode_spike_train(drive.encode_x, cfg.grid(), cfg.n_t);
            break;
    }

    const MembraneTrace trace = simulate_neuron(spec, solver, input, sim_cfg);
    return format_trace(trace, input, model);
}

}  // namespace spikebench
