#include "spikebench/encode.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spikebench {

const char* to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::Square: return "square";
        case TargetKind::Discontinuity: return "discontinuity";
        case TargetKind::Sine: return "sine";
    }
    return "?";
}

TargetKind target_kind_from_string(const std::string& name) {
    if (name == "square") return TargetKind::Square;
    if (name == "discontinuity") return TargetKind::Discontinuity;
    if (name == "sine") return TargetKind::Sine;
    throw std::invalid_argument("unknown target function: " + name);
}

void validate(const Grid& grid) {
    if (grid.n_x < 2) throw std::invalid_argument("grid: n_x must be >= 2");
    if (!(grid.x_min < 0.0 && 0.0 < grid.x_max))
        throw std::invalid_argument("grid: domain must satisfy x_min < 0 < x_max");
}

double Grid::point(std::size_t j) const {
    return x_min + static_cast<double>(j) * (x_max - x_min) / static_cast<double>(n_x - 1);
}

std::vector<double> Grid::points() const {
    validate(*this);
    std::vector<double> xs(n_x);
    for (std::size_t j = 0; j < n_x; ++j) xs[j] = point(j);
    return xs;
}

std::size_t SpikeRaster::total_spikes() const {
    std::size_t n = 0;
    for (auto b : data) n += b;
    return n;
}

double evaluate_target(const TargetFunction& fn, double x) {
    switch (fn.kind) {
        case TargetKind::Square: return x * x;
        case TargetKind::Discontinuity: return x <= 0.0 ? 1.0 : 2.0;
        case TargetKind::Sine: return std::sin(fn.k * x) / (fn.k * fn.k);
    }
    return 0.0;
}

namespace {

// Gaussian draws via Box-Muller over mt19937_64 so the stream does not depend
// on the standard library's unspecified normal_distribution.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform_open() {  // (0, 1]
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

std::vector<double> sample_targets(const TargetFunction& fn, const Grid& grid,
                                   const NoiseSpec& noise) {
    validate(grid);
    if (noise.sigma < 0.0) throw std::invalid_argument("noise: sigma must be >= 0");
    std::vector<double> ys(grid.n_x);
    for (std::size_t j = 0; j < grid.n_x; ++j) ys[j] = evaluate_target(fn, grid.point(j));
    if (noise.enabled && noise.sigma > 0.0) {
        GaussianSource gauss(noise.seed);
        for (auto& y : ys) y += noise.sigma * gauss.next();
    }
    return ys;
}

std::vector<std::uint8_t> encode_spike_train(double x, const Grid& grid, std::size_t n_t) {
    validate(grid);
    if (n_t < 1) throw std::invalid_argument("encode: n_t must be >= 1");
    if (x < grid.x_min || x > grid.x_max)
        throw std::invalid_argument("encode: x outside the grid domain");
    const double r = kMinRate + (1.0 - kMinRate) * (x - grid.x_min) / (grid.x_max - grid.x_min);
    const auto s = static_cast<std::int64_t>(std::llround(r * static_cast<double>(n_t)));
    const auto n = static_cast<std::int64_t>(n_t);
    std::vector<std::uint8_t> train(n_t, 0);
    for (std::int64_t t = 0; t < n; ++t) {
        if (((t + 1) * s) / n > (t * s) / n) train[static_cast<std::size_t>(t)] = 1;
    }
    return train;
}

EncodedInput encode_all(const Grid& grid, std::size_t n_t) {
    validate(grid);
    EncodedInput input;
    input.raster.n_x = grid.n_x;
    input.raster.n_t = n_t;
    input.raster.data.resize(grid.n_x * n_t);
    for (std::size_t j = 0; j < grid.n_x; ++j) {
        const auto row = encode_spike_train(grid.point(j), grid, n_t);
        std::copy(row.begin(), row.end(), input.raster.data.begin() + j * n_t);
    }
    return input;
}

std::string format_raster(const SpikeRaster& raster, const Grid& grid) {
    std::ostringstream os;
    os << raster.n_x << ' ' << raster.n_t << ' ' << grid.x_min << ' ' << grid.x_max << '\n';
    for (std::size_t j = 0; j < raster.n_x; ++j) {
        for (std::size_t t = 0; t < raster.n_t; ++t) {
            if (t) os << ' ';
            os << int(raster.at(j, t));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace spikebench
