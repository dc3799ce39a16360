#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specbias {

// Activation zoo for shallow-network design matrices. Every activation is
// evaluated as eta(sigma * u), i.e. a fixed profile composed with a scale.
enum class ActivationKind {
    heaviside,  // [v > 0]
    relu,       // max(v, 0)
    relu2,      // max(v, 0)^2
    tanh,       // tanh(v)
    gelu,       // v * Phi(v), Phi = standard normal CDF
    silu,       // v / (1 + exp(-v))
    sinc,       // sin(pi v) / (pi v), 1 at v = 0
    gaussian,   // exp(-v^2 / pi)
    impulse,    // Kronecker delta; only meaningful on grid-aligned inputs
};

enum class MonotonicityClass { monotonic, non_monotonic };

struct ActivationSpec {
    ActivationKind kind = ActivationKind::relu;
    double sigma = 1.0;  // scale factor, > 0

    ActivationSpec() = default;
    ActivationSpec(ActivationKind k, double s) : kind(k), sigma(s) {
        if (!(sigma > 0.0)) throw std::invalid_argument("ActivationSpec: sigma must be > 0");
    }
};

inline double evaluate(const ActivationSpec& spec, double u) {
    const double v = spec.sigma * u;
    switch (spec.kind) {
        case ActivationKind::heaviside: return v > 0.0 ? 1.0 : 0.0;
        case ActivationKind::relu: return v > 0.0 ? v : 0.0;
        case ActivationKind::relu2: return v > 0.0 ? v * v : 0.0;
        case ActivationKind::tanh: return std::tanh(v);
        case ActivationKind::gelu: return v * 0.5 * (1.0 + std::erf(v / std::sqrt(2.0)));
        case ActivationKind::silu: return v / (1.0 + std::exp(-v));
        case ActivationKind::sinc: {
            if (v == 0.0) return 1.0;
            const double pv = M_PI * v;
            return std::sin(pv) / pv;
        }
        case ActivationKind::gaussian: return std::exp(-v * v / M_PI);
        case ActivationKind::impulse: return u == 0.0 ? 1.0 : 0.0;
    }
    throw std::logic_error("evaluate: unknown activation kind");
}

// Quasi-monotonic activations (gelu, silu) are labelled monotonic: under
// growing scale they tend to relu, while sinc/gaussian/impulse tend to a delta.
inline MonotonicityClass classify(const ActivationSpec& spec) {
    switch (spec.kind) {
        case ActivationKind::heaviside:
        case ActivationKind::relu:
        case ActivationKind::relu2:
        case ActivationKind::tanh:
        case ActivationKind::gelu:
        case ActivationKind::silu:
            return MonotonicityClass::monotonic;
        case ActivationKind::sinc:
        case ActivationKind::gaussian:
        case ActivationKind::impulse:
            return MonotonicityClass::non_monotonic;
    }
    throw std::logic_error("classify: unknown activation kind");
}

inline std::string to_string(ActivationKind kind) {
    switch (kind) {
        case ActivationKind::heaviside: return "heaviside";
        case ActivationKind::relu: return "relu";
        case ActivationKind::relu2: return "relu2";
        case ActivationKind::tanh: return "tanh";
        case ActivationKind::gelu: return "gelu";
        case ActivationKind::silu: return "silu";
        case ActivationKind::sinc: return "sinc";
        case ActivationKind::gaussian: return "gaussian";
        case ActivationKind::impulse: return "impulse";
    }
    return "?";
}

inline ActivationKind activation_from_string(std::string_view name) {
    if (name == "heaviside") return ActivationKind::heaviside;
    if (name == "relu") return ActivationKind::relu;
    if (name == "relu2") return ActivationKind::relu2;
    if (name == "tanh") return ActivationKind::tanh;
    if (name == "gelu") return ActivationKind::gelu;
    if (name == "silu") return ActivationKind::silu;
    if (name == "sinc") return ActivationKind::sinc;
    if (name == "gaussian" || name == "gauss") return ActivationKind::gaussian;
    if (name == "impulse") return ActivationKind::impulse;
    throw std::invalid_argument("unknown activation name: " + std::string(name));
}

}  // namespace specbias
