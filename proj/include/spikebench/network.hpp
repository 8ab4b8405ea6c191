#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spikebench/encode.hpp"
#include "spikebench/models.hpp"
#include "spikebench/solvers.hpp"

namespace spikebench {

// Linear readout over the n_t output spike slots, plus a bias.
struct SynapseWeights {
    std::vector<double> w;
    double bias = 0.0;
};

enum class TrainMethod { RidgeClosedForm, GradientDescent };

const char* to_string(TrainMethod method);
TrainMethod train_method_from_string(const std::string& name);

struct TrainConfig {
    TrainMethod method = TrainMethod::RidgeClosedForm;
    double ridge_lambda = 0.08;
    double learning_rate = 1e-3;
    std::size_t epochs = 2000;
    std::uint64_t seed = 0;
};

void validate(const TrainConfig& cfg);

struct RegressionResult {
    std::vector<double> predictions;
    double l2_sum = 0.0;
    double l2_relative = 0.0;
    std::size_t output_spike_count = 0;
    double train_time = 0.0;  // seconds
    double sim_time = 0.0;    // seconds, encode + membrane forward
};

// Applies simulate_neuron row-by-row (rows fan out to worker threads; results
// land in disjoint row slots, counts reduced in row order). Returns the output
// raster and the total spike count.
std::pair<SpikeRaster, std::size_t> membrane_forward(const ModelSpec& spec, SolverKind solver,
                                                     const EncodedInput& input,
                                                     const SimulationConfig& config);

// RidgeClosedForm: unique minimizer of sum_j (w.s_j + b - y_j)^2 + lambda |w|^2
// (bias unpenalized) via the normal equations. GradientDescent: full-batch
// iterate after `epochs` steps from zero initialization on the same objective
// scaled by 1/n_x. Throws std::runtime_error when the lambda = 0 solve is
// singular.
SynapseWeights train_synapse(const SpikeRaster& output, const std::vector<double>& targets,
                             const TrainConfig& cfg);

std::vector<double> predict(const SynapseWeights& weights, const SpikeRaster& output);

// Returns (sum of squared errors, sqrt(l2_sum / sum y_exact^2)). Throws on
// length mismatch or when the exact vector has zero norm.
std::pair<double, double> l2_error(std::span<const double> y_pred,
                                   std::span<const double> y_exact);

// encode_all -> membrane_forward -> train (on possibly noisy targets) ->
// predict -> l2_error against the exact targets.
RegressionResult run_regression(const ModelSpec& spec, SolverKind solver,
                                const TargetFunction& fn, const Grid& grid,
                                const NoiseSpec& noise, const SimulationConfig& sim_cfg,
                                const TrainConfig& train_cfg);

// Two-column text "x y", one row per grid point.
std::string format_curve(const Grid& grid, std::span<const double> values);

}  // namespace spikebench
