#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spikebench/config.hpp"

namespace spikebench {

struct CellResult {
    ModelKind model = ModelKind::Lif;
    SolverKind solver = SolverKind::Euler;
    TargetKind function = TargetKind::Square;
    bool noisy = false;
    double l2_sum = 0.0;
    double l2_relative = 0.0;
    std::size_t output_spike_count = 0;
    double sim_time = 0.0;
    double train_time = 0.0;
    std::string error;  // non-empty when the cell failed

    bool ok() const { return error.empty(); }
    std::string name() const { return cell_name(model, solver, function, noisy); }
};

struct ExperimentReport {
    std::uint64_t seed = 0;
    std::string version;
    std::string config_summary;
    std::vector<CellResult> cells;

    bool all_ok() const;
};

// Runs one cell of the grid; exceptions are captured into CellResult::error.
CellResult run_cell(const ExperimentConfig& cfg, ModelKind model, SolverKind solver,
                    TargetKind fn, bool noisy);

// Runs every configured cell in canonical order (models x solvers x functions
// x noise). A failing cell is recorded and does not abort the rest.
ExperimentReport run_grid(const ExperimentConfig& cfg);

enum class DrivePattern { Constant, Burst, Encode };

struct DriveSpec {
    DrivePattern pattern = DrivePattern::Constant;
    double amplitude = 0.0;       // constant:<amp>; 0 selects the model default
    std::size_t burst_start = 0;  // burst:<start>:<len>
    std::size_t burst_len = 0;
    double encode_x = 0.0;        // encode:<x>

    // Parses "constant:<amp>", "burst:<start>:<len>" or "encode:<x>".
    static DriveSpec parse(const std::string& text);
};

// Builds the input spike train for a drive pattern and simulates one neuron;
// returns the plot-ready trace text (input spikes, membrane state, output
// spikes per row).
std::string trace_demo(const ExperimentConfig& cfg, ModelKind model, SolverKind solver,
                       const DriveSpec& drive);

}  // namespace spikebench
