#include "spikebench/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spikebench {

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Lif: return "lif";
        case ModelKind::Fhn: return "fhn";
        case ModelKind::Izh: return "izh";
        case ModelKind::Hh: return "hh";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "lif") return ModelKind::Lif;
    if (name == "fhn") return ModelKind::Fhn;
    if (name == "izh") return ModelKind::Izh;
    if (name == "hh") return ModelKind::Hh;
    throw std::invalid_argument("unknown model kind: " + name);
}

ModelKind kind_of(const ModelSpec& spec) {
    return static_cast<ModelKind>(spec.index());
}

std::size_t state_dim(ModelKind kind) {
    switch (kind) {
        case ModelKind::Lif: return 1;
        case ModelKind::Fhn: return 2;
        case ModelKind::Izh: return 2;
        case ModelKind::Hh: return 4;
    }
    return 0;
}

void validate(const ModelSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LifSpec>) {
                if (!(s.rc > 0.0)) throw std::invalid_argument("lif: rc must be > 0");
                if (!(s.v_th > s.v_rest)) throw std::invalid_argument("lif: v_th must exceed v_rest");
            } else if constexpr (std::is_same_v<T, FhnSpec>) {
                if (!(s.gamma > 0.0)) throw std::invalid_argument("fhn: gamma must be > 0");
            } else if constexpr (std::is_same_v<T, IzhSpec>) {
                if (!(s.a > 0.0)) throw std::invalid_argument("izh: a must be > 0");
                if (!(s.c < s.v_th)) throw std::invalid_argument("izh: reset c must lie below v_th");
            } else {
                if (!(s.c_m > 0.0)) throw std::invalid_argument("hh: c_m must be > 0");
                if (s.g_l < 0.0 || s.g_k < 0.0 || s.g_na < 0.0)
                    throw std::invalid_argument("hh: conductances must be >= 0");
                if (!(s.e_k < s.e_l && s.e_l < s.e_na))
                    throw std::invalid_argument("hh: expected reversal ordering e_k < e_l < e_na");
            }
        },
        spec);
}

NeuronState initial_state(const ModelSpec& spec) {
    NeuronState st;
    std::visit(
        [&st](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LifSpec>) {
                st.dim = 1;
                st.y = {s.v_rest, 0.0, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, FhnSpec>) {
                st.dim = 2;
                st.y = {0.0, 0.0, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, IzhSpec>) {
                st.dim = 2;
                st.y = {s.v0, s.u0, 0.0, 0.0};
            } else {
                st.dim = 4;
                st.y = {s.v0, s.n0, s.m0, s.h0};
            }
        },
        spec);
    return st;
}

namespace {

// x / (e^x - 1) with the removable singularity at 0 filled in.
double phi(double x) {
    if (x == 0.0) return 1.0;
    return x / std::expm1(x);
}

// exp with a saturated argument so the rate functions stay finite in double
// precision for any finite voltage (RK4 stage states can probe far off the
// physical manifold).
double sat_exp(double x) {
    return std::exp(std::min(x, 60.0));
}

}  // namespace

RateConstants hh_rate_constants(double v_m, double v0) {
    const double u = v_m - v0;
    RateConstants r;
    r.alpha_n = 0.1 * phi(1.0 - 0.1 * u);
    r.beta_n = 0.125 * sat_exp(-u / 80.0);
    r.alpha_m = phi(2.5 - 0.1 * u);
    r.beta_m = 4.0 * sat_exp(-u / 18.0);
    r.alpha_h = 0.07 * sat_exp(-u / 20.0);
    r.beta_h = 1.0 / (1.0 + sat_exp(3.0 - u / 10.0));
    return r;
}

StateDeriv lif_derivative(const NeuronState& state, const LifSpec& spec, double i_in) {
    const double v = state.y[0];
    return {-(v - spec.v_rest) / spec.rc + i_in, 0.0, 0.0, 0.0};
}

StateDeriv fhn_derivative(const NeuronState& state, const FhnSpec& spec, double i_in) {
    const double v = state.y[0];
    const double w = state.y[1];
    return {v - (v * v * v) / 3.0 - w + i_in,
            (v + spec.alpha - spec.beta * w) / spec.gamma, 0.0, 0.0};
}

StateDeriv izh_derivative(const NeuronState& state, const IzhSpec& spec, double i_in) {
    const double v = state.y[0];
    const double u = state.y[1];
    return {0.04 * (v * v) + 5.0 * v + 140.0 - u + i_in,
            spec.a * (spec.b * v - u), 0.0, 0.0};
}

StateDeriv hh_derivative(const NeuronState& state, const HhSpec& spec, double i_in) {
    const double v = state.y[0];
    const double n = state.y[1];
    const double m = state.y[2];
    const double h = state.y[3];
    const RateConstants r = hh_rate_constants(v, spec.v0);
    const double n4 = (n * n) * (n * n);
    const double m3 = m * m * m;
    const double dv = (-spec.g_l * (v - spec.e_l) - spec.g_k * n4 * (v - spec.e_k) -
                       spec.g_na * m3 * h * (v - spec.e_na) + i_in) /
                      spec.c_m;
    return {dv,
            r.alpha_n * (1.0 - n) - r.beta_n * n,
            r.alpha_m * (1.0 - m) - r.beta_m * m,
            r.alpha_h * (1.0 - h) - r.beta_h * h};
}

StateDeriv derivative(const ModelSpec& spec, const NeuronState& state, double i_in) {
    switch (kind_of(spec)) {
        case ModelKind::Lif: return lif_derivative(state, std::get<LifSpec>(spec), i_in);
        case ModelKind::Fhn: return fhn_derivative(state, std::get<FhnSpec>(spec), i_in);
        case ModelKind::Izh: return izh_derivative(state, std::get<IzhSpec>(spec), i_in);
        case ModelKind::Hh: return hh_derivative(state, std::get<HhSpec>(spec), i_in);
    }
    return {};
}

bool apply_threshold(const ModelSpec& spec, NeuronState& state) {
    return std::visit(
        [&state](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if (state.y[0] < s.v_th) return false;
            if constexpr (std::is_same_v<T, LifSpec>) {
                state.y[0] = s.v_rest;
            } else if constexpr (std::is_same_v<T, FhnSpec>) {
                state.y[0] = s.v_reset;  // w relaxes via its own ODE
            } else if constexpr (std::is_same_v<T, IzhSpec>) {
                state.y[0] = s.c;
                state.y[1] += s.d;
            } else {
                // Reset to the t=0 membrane state; the initial gates are the
                // steady-state gates at v0, so this re-equilibrates the channels.
                state.y = {s.v0, s.n0, s.m0, s.h0};
            }
            return true;
        },
        spec);
}

}  // namespace spikebench
