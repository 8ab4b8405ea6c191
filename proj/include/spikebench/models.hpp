#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>

namespace spikebench {

enum class ModelKind { Lif, Fhn, Izh, Hh };

const char* to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

// Leaky integrate-and-fire: dv/dt = -(v - v_rest)/rc + I, reset v -> v_rest at v_th.
struct LifSpec {
    double rc = 0.2;      // membrane time constant R*C
    double v_rest = 0.0;
    double v_th = 1.0;
};

// FitzHugh-Nagumo: dv/dt = v - v^3/3 - w + I, dw/dt = (v + alpha - beta*w)/gamma.
struct FhnSpec {
    double alpha = 0.7;   // bifurcation parameter
    double beta = 0.8;    // recovery sensitivity
    double gamma = 12.5;  // recovery timescale
    double v_th = 1.0;
    double v_reset = 0.0;
};

// Izhikevich: dv/dt = 0.04 v^2 + 5v + 140 - u + I, du/dt = a(bv - u),
// reset {v -> c, u -> u + d} at v_th.
struct IzhSpec {
    double a = 0.02;      // recovery timescale, 1/ms
    double b = 0.2;       // recovery sensitivity
    double c = -50.0;     // after-spike membrane reset, mV
    double d = 2.0;       // after-spike recovery increment
    double v_th = 30.0;   // detection level; conventional, not fixed by the model
    double v0 = -70.0;
    double u0 = -14.0;
};

// Hodgkin-Huxley with potassium (n^4) and sodium (m^3 h) channels plus leak.
// Membrane resets to the full initial state when v crosses v_th; the initial
// gating values are the steady-state gates at v0.
struct HhSpec {
    double c_m = 1.0;     // membrane capacitance, uF
    double g_l = 0.3;     // conductances, mS
    double g_k = 36.0;
    double g_na = 120.0;
    double e_l = -54.0;   // reversal potentials, mV
    double e_k = -77.0;
    double e_na = 50.0;
    double v_th = 30.0;
    double v0 = -65.0;
    double n0 = 0.3177;
    double m0 = 0.0529;
    double h0 = 0.5960;
};

using ModelSpec = std::variant<LifSpec, FhnSpec, IzhSpec, HhSpec>;

ModelKind kind_of(const ModelSpec& spec);
std::size_t state_dim(ModelKind kind);

// Throws std::invalid_argument when a spec violates its invariants
// (rc > 0, gamma > 0, a > 0, c < v_th, conductances >= 0, c_m > 0,
// e_k < e_l < e_na, v_th > v_rest).
void validate(const ModelSpec& spec);

// Dynamical state. Components beyond dim are zero and ignored:
//   LIF (v), FHN (v, w), IZH (v, u), HH (v, n, m, h).
struct NeuronState {
    std::array<double, 4> y{};
    std::size_t dim = 1;

    double v() const { return y[0]; }
    double& v() { return y[0]; }
};

using StateDeriv = std::array<double, 4>;

NeuronState initial_state(const ModelSpec& spec);

// Voltage-dependent channel rates, all >= 0 and finite for finite input.
struct RateConstants {
    double alpha_n = 0.0;
    double beta_n = 0.0;
    double alpha_m = 0.0;
    double beta_m = 0.0;
    double alpha_h = 0.0;
    double beta_h = 0.0;
};

// Rates evaluated at U = v_m - v0. The removable singularities of alpha_n
// (U = 10) and alpha_m (U = 25) are replaced by their limits 0.1 and 1.0.
RateConstants hh_rate_constants(double v_m, double v0);

StateDeriv lif_derivative(const NeuronState& state, const LifSpec& spec, double i_in);
StateDeriv fhn_derivative(const NeuronState& state, const FhnSpec& spec, double i_in);
StateDeriv izh_derivative(const NeuronState& state, const IzhSpec& spec, double i_in);
StateDeriv hh_derivative(const NeuronState& state, const HhSpec& spec, double i_in);

StateDeriv derivative(const ModelSpec& spec, const NeuronState& state, double i_in);

// Per-step auxiliary threshold rule. Mutates state on a spike and returns
// whether one fired:
//   LIF v -> v_rest; FHN v -> v_reset (w kept); IZH v -> c, u += d;
//   HH full state -> (v0, n0, m0, h0).
bool apply_threshold(const ModelSpec& spec, NeuronState& state);

}  // namespace spikebench
