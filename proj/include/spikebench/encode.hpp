#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spikebench {

enum class TargetKind { Square, Discontinuity, Sine };

const char* to_string(TargetKind kind);
TargetKind target_kind_from_string(const std::string& name);

// Square: y = x^2. Discontinuity: y = 1 for x <= 0, 2 for x > 0.
// Sine: y = sin(kx)/k^2.
struct TargetFunction {
    TargetKind kind = TargetKind::Square;
    double k = 1.2;  // Sine frequency
};

struct Grid {
    std::size_t n_x = 100;
    double x_min = -1.0;
    double x_max = 1.0;

    // Evenly spaced, inclusive of both ends. Requires n_x >= 2 and
    // x_min < 0 < x_max (the discontinuity must lie inside the domain).
    std::vector<double> points() const;
    double point(std::size_t j) const;
};

void validate(const Grid& grid);

struct NoiseSpec {
    double sigma = 0.1;
    std::uint64_t seed = 42;
    bool enabled = false;
};

// Binary spike matrix, n_x rows by n_t columns, row-major.
struct SpikeRaster {
    std::size_t n_x = 0;
    std::size_t n_t = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(std::size_t j, std::size_t t) const { return data[j * n_t + t]; }
    std::uint8_t& at(std::size_t j, std::size_t t) { return data[j * n_t + t]; }
    std::size_t total_spikes() const;
};

struct EncodedInput {
    SpikeRaster raster;
};

double evaluate_target(const TargetFunction& fn, double x);

// y_j = fn(x_j) (+ seeded N(0, sigma^2) when noise is enabled).
std::vector<double> sample_targets(const TargetFunction& fn, const Grid& grid,
                                   const NoiseSpec& noise);

// Deterministic rate coding: r = r_min + (1 - r_min)(x - x_min)/(x_max - x_min)
// with r_min = 0.1; s = round(r * n_t) spikes (round half away from zero)
// placed by an integer accumulator, spike at step t when
// floor((t+1) s / n_t) > floor(t s / n_t). Throws for x outside the domain.
std::vector<std::uint8_t> encode_spike_train(double x, const Grid& grid, std::size_t n_t);

EncodedInput encode_all(const Grid& grid, std::size_t n_t);

// Text export: header "n_x n_t x_min x_max" then one 0/1 row per point.
std::string format_raster(const SpikeRaster& raster, const Grid& grid);

// Minimum spiking rate assigned to x = x_min; keeps the left edge responsive.
inline constexpr double kMinRate = 0.1;

}  // namespace spikebench
