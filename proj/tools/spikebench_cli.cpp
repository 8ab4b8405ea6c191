// Command line harness: `run` executes the experiment grid and reports it,
// `trace` dumps single-neuron membrane traces for plotting.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "spikebench/config.hpp"
#include "spikebench/experiment.hpp"
#include "spikebench/report.hpp"

using namespace spikebench;

namespace {

void apply_overrides(ExperimentConfig& cfg, const std::vector<std::string>& overrides) {
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        apply_config_line(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spikebench: spiking-neuron function regression benchmark"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run the experiment grid and emit a report");
    std::string models, solvers, functions, noise, config_path, out_path = "-", format = "table";
    std::string dump_raster, dump_predictions;
    std::vector<std::string> sets;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t nx = 0, nt = 0;
    double dt = 0.0;
    run->add_option("--models", models, "comma list from {lif,fhn,izh,hh}");
    run->add_option("--solvers", solvers, "comma list from {euler,rk4}");
    run->add_option("--functions", functions, "comma list from {square,discontinuity,sine}");
    run->add_option("--noise", noise, "comma list from {off,on}");
    run->add_option("--nx", nx, "collocation points");
    run->add_option("--nt", nt, "time steps");
    run->add_option("--dt", dt, "time step size");
    run->add_option("--seed", seed, "global seed")->each([&](const std::string&) { seed_given = true; });
    run->add_option("--config", config_path, "key=value config file; flags override it");
    run->add_option("--out", out_path, "output path, '-' for stdout");
    run->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    run->add_option("--set", sets, "extra key=value overrides (repeatable)");
    run->add_option("--dump-raster", dump_raster, "write the encoded input raster here");
    run->add_option("--dump-predictions", dump_predictions,
                    "directory for per-cell x,y_pred and x,y_exact files");

    // trace
    auto* trace = app.add_subcommand("trace", "dump a single-neuron membrane trace");
    std::string t_model = "hh", t_solver = "euler", t_drive = "constant:0", t_out = "-";
    std::string t_config;
    std::vector<std::string> t_sets;
    std::size_t t_nt = 0;
    double t_dt = 0.0;
    trace->add_option("--model", t_model, "lif|fhn|izh|hh")->required();
    trace->add_option("--solver", t_solver, "euler|rk4")->required();
    trace->add_option("--drive", t_drive, "constant:<amp>|burst:<start>:<len>|encode:<x>")
        ->required();
    trace->add_option("--out", t_out, "output path, '-' for stdout");
    trace->add_option("--nt", t_nt, "time steps");
    trace->add_option("--dt", t_dt, "time step size");
    trace->add_option("--config", t_config, "key=value config file");
    trace->add_option("--set", t_sets, "extra key=value overrides (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
            if (!models.empty()) apply_config_line(cfg, "models", models);
            if (!solvers.empty()) apply_config_line(cfg, "solvers", solvers);
            if (!functions.empty()) apply_config_line(cfg, "functions", functions);
            if (!noise.empty()) apply_config_line(cfg, "noise", noise);
            if (nx) cfg.n_x = nx;
            if (nt) cfg.n_t = nt;
            if (dt > 0.0) cfg.dt = dt;
            if (seed_given) cfg.seed = seed;
            apply_overrides(cfg, sets);
            validate(cfg);

            if (!dump_raster.empty()) {
                const EncodedInput input = encode_all(cfg.grid(), cfg.n_t);
                write_text_file(dump_raster, format_raster(input.raster, cfg.grid()));
            }

            const ExperimentReport report = run_grid(cfg);
            emit_report(report, report_format_from_string(format), out_path);

            if (!dump_predictions.empty()) {
                for (auto model : cfg.models) {
                    for (auto solver : cfg.solvers) {
                        for (auto fn : cfg.functions) {
                            for (bool noisy : cfg.noise) {
                                SimulationConfig sim{cfg.dt, cfg.n_t, cfg.amplitude(model)};
                                NoiseSpec ns{cfg.noise_sigma,
                                             cell_seed(cfg.seed, cell_name(model, solver, fn, noisy)),
                                             noisy};
                                TargetFunction target{fn, cfg.sine_k};
                                const auto res = run_regression(cfg.model_spec(model), solver,
                                                                target, cfg.grid(), ns, sim,
                                                                cfg.train);
                                const std::string stem = dump_predictions + "/" +
                                                         to_string(model) + "_" + to_string(solver) +
                                                         "_" + to_string(fn) +
                                                         (noisy ? "_noisy" : "_noiseless");
                                write_text_file(stem + "_pred.txt",
                                                format_curve(cfg.grid(), res.predictions));
                                NoiseSpec off = ns;
                                off.enabled = false;
                                write_text_file(stem + "_exact.txt",
                                                format_curve(cfg.grid(),
                                                             sample_targets(target, cfg.grid(), off)));
                            }
                        }
                    }
                }
            }
            return report.all_ok() ? 0 : 1;
        }

        // trace
        ExperimentConfig cfg;
        if (!t_config.empty()) cfg = load_config_file(t_config, cfg);
        if (t_nt) cfg.n_t = t_nt;
        if (t_dt > 0.0) cfg.dt = t_dt;
        apply_overrides(cfg, t_sets);
        const std::string text = trace_demo(cfg, model_kind_from_string(t_model),
                                            solver_kind_from_string(t_solver),
                                            DriveSpec::parse(t_drive));
        write_text_file(t_out, text);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
