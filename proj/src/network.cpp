#include "spikebench/network.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace spikebench {

const char* to_string(TrainMethod method) {
    return method == TrainMethod::RidgeClosedForm ? "ridge" : "gd";
}

TrainMethod train_method_from_string(const std::string& name) {
    if (name == "ridge") return TrainMethod::RidgeClosedForm;
    if (name == "gd") return TrainMethod::GradientDescent;
    throw std::invalid_argument("unknown train method: " + name);
}

void validate(const TrainConfig& cfg) {
    if (cfg.ridge_lambda < 0.0) throw std::invalid_argument("train: ridge_lambda must be >= 0");
    if (!(cfg.learning_rate > 0.0)) throw std::invalid_argument("train: learning_rate must be > 0");
    if (cfg.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
}

std::pair<SpikeRaster, std::size_t> membrane_forward(const ModelSpec& spec, SolverKind solver,
                                                     const EncodedInput& input,
                                                     const SimulationConfig& config) {
    const SpikeRaster& in = input.raster;
    if (in.n_t != config.n_steps)
        throw std::invalid_argument("membrane_forward: raster n_t does not match n_steps");

    SpikeRaster out;
    out.n_x = in.n_x;
    out.n_t = in.n_t;
    out.data.assign(in.n_x * in.n_t, 0);

    const auto simulate_row = [&](std::size_t j) {
        std::vector<std::uint8_t> row(in.data.begin() + j * in.n_t,
                                      in.data.begin() + (j + 1) * in.n_t);
        const MembraneTrace trace = simulate_neuron(spec, solver, row, config);
        std::copy(trace.spikes.begin(), trace.spikes.end(), out.data.begin() + j * in.n_t);
    };

    const std::size_t n_workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), in.n_x);
    if (n_workers <= 1 || in.n_x < 8) {
        for (std::size_t j = 0; j < in.n_x; ++j) simulate_row(j);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t j = w; j < in.n_x; j += n_workers) simulate_row(j);
            });
        }
        for (auto& t : workers) t.join();
    }

    const std::size_t total = out.total_spikes();
    return {std::move(out), total};
}

namespace {

Eigen::MatrixXd design_matrix(const SpikeRaster& output) {
    Eigen::MatrixXd x(output.n_x, output.n_t + 1);
    for (std::size_t j = 0; j < output.n_x; ++j) {
        for (std::size_t t = 0; t < output.n_t; ++t)
            x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t)) = output.at(j, t);
        x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(output.n_t)) = 1.0;
    }
    return x;
}

SynapseWeights ridge_closed_form(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                 double lambda) {
    const Eigen::Index p = x.cols();
    Eigen::MatrixXd gram = x.transpose() * x;
    for (Eigen::Index i = 0; i + 1 < p; ++i) gram(i, i) += lambda;  // bias unpenalized
    const Eigen::VectorXd rhs = x.transpose() * y;
    const Eigen::VectorXd beta = gram.ldlt().solve(rhs);
    if (lambda == 0.0) {
        const double residual = (gram * beta - rhs).norm();
        if (!(residual <= 1e-8 * (rhs.norm() + 1.0)))
            throw std::runtime_error("train_synapse: normal equations are singular at lambda = 0");
    }
    SynapseWeights w;
    w.w.assign(beta.data(), beta.data() + p - 1);
    w.bias = beta(p - 1);
    return w;
}

SynapseWeights gradient_descent(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const TrainConfig& cfg) {
    // Same objective as the closed form scaled by 1/n, so both trainers share
    // the minimizer.
    const Eigen::Index p = x.cols();
    const double n = static_cast<double>(x.rows());
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        Eigen::VectorXd residual = x * beta - y;
        Eigen::VectorXd grad = (2.0 / n) * (x.transpose() * residual);
        grad.head(p - 1) += (2.0 * cfg.ridge_lambda / n) * beta.head(p - 1);
        beta -= cfg.learning_rate * grad;
    }
    SynapseWeights w;
    w.w.assign(beta.data(), beta.data() + p - 1);
    w.bias = beta(p - 1);
    return w;
}

}  // namespace

SynapseWeights train_synapse(const SpikeRaster& output, const std::vector<double>& targets,
                             const TrainConfig& cfg) {
    validate(cfg);
    if (targets.size() != output.n_x)
        throw std::invalid_argument("train_synapse: targets length does not match raster rows");
    const Eigen::MatrixXd x = design_matrix(output);
    const Eigen::VectorXd y =
        Eigen::Map<const Eigen::VectorXd>(targets.data(), static_cast<Eigen::Index>(targets.size()));
    return cfg.method == TrainMethod::RidgeClosedForm ? ridge_closed_form(x, y, cfg.ridge_lambda)
                                                      : gradient_descent(x, y, cfg);
}

std::vector<double> predict(const SynapseWeights& weights, const SpikeRaster& output) {
    if (weights.w.size() != output.n_t)
        throw std::invalid_argument("predict: weight length does not match raster n_t");
    std::vector<double> yhat(output.n_x, 0.0);
    for (std::size_t j = 0; j < output.n_x; ++j) {
        double acc = weights.bias;
        const std::uint8_t* row = output.data.data() + j * output.n_t;
        for (std::size_t t = 0; t < output.n_t; ++t)
            if (row[t]) acc += weights.w[t];
        yhat[j] = acc;
    }
    return yhat;
}

std::pair<double, double> l2_error(std::span<const double> y_pred,
                                   std::span<const double> y_exact) {
    if (y_pred.size() != y_exact.size())
        throw std::invalid_argument("l2_error: length mismatch");
    double sum_sq = 0.0;
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < y_pred.size(); ++j) {
        const double diff = y_pred[j] - y_exact[j];
        sum_sq += diff * diff;
        norm_sq += y_exact[j] * y_exact[j];
    }
    if (norm_sq == 0.0)
        throw std::invalid_argument("l2_error: relative error undefined for zero exact norm");
    return {sum_sq, std::sqrt(sum_sq / norm_sq)};
}

RegressionResult run_regression(const ModelSpec& spec, SolverKind solver,
                                const TargetFunction& fn, const Grid& grid,
                                const NoiseSpec& noise, const SimulationConfig& sim_cfg,
                                const TrainConfig& train_cfg) {
    validate(spec);
    validate(grid);
    validate(train_cfg);

    using clock = std::chrono::steady_clock;
    RegressionResult result;

    const auto t0 = clock::now();
    const EncodedInput input = encode_all(grid, sim_cfg.n_steps);
    auto [output, total_spikes] = membrane_forward(spec, solver, input, sim_cfg);
    result.sim_time = std::chrono::duration<double>(clock::now() - t0).count();
    result.output_spike_count = total_spikes;

    const std::vector<double> train_targets = sample_targets(fn, grid, noise);
    NoiseSpec off = noise;
    off.enabled = false;
    const std::vector<double> exact_targets = sample_targets(fn, grid, off);

    const auto t1 = clock::now();
    const SynapseWeights weights = train_synapse(output, train_targets, train_cfg);
    result.train_time = std::chrono::duration<double>(clock::now() - t1).count();

    result.predictions = predict(weights, output);
    std::tie(result.l2_sum, result.l2_relative) = l2_error(result.predictions, exact_targets);
    return result;
}

std::string format_curve(const Grid& grid, std::span<const double> values) {
    std::ostringstream os;
    for (std::size_t j = 0; j < grid.n_x && j < values.size(); ++j)
        os << grid.point(j) << ' ' << values[j] << '\n';
    return os.str();
}

}  // namespace spikebench
