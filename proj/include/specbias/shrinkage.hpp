#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "specbias/spectral.hpp"

namespace specbias {

// Gradient-flow mask m(s; alpha, q) = 1 - exp(-alpha q s^2). Monotonically
// increasing in s, zero at s = 0, saturates at 1.
inline double mask_gd(double s, double alpha, double q) {
    if (!(alpha > 0.0) || !(q > 0.0)) throw std::invalid_argument("mask_gd: alpha and q must be > 0");
    return 1.0 - std::exp(-alpha * q * s * s);
}

// Finite-iteration mask 1 - (1 - alpha s^2)^q from the Neumann-series form
// of the descent recursion. Requires alpha s^2 <= 1 for stability.
inline double mask_gd_neumann(double s, double alpha, long q) {
    if (!(alpha > 0.0) || q < 1) throw std::invalid_argument("mask_gd_neumann: alpha must be > 0 and q >= 1");
    const double z = alpha * s * s;
    if (z > 1.0 + 1e-9) throw std::invalid_argument("mask_gd_neumann: stability requires alpha * s^2 <= 1");
    return 1.0 - std::pow(1.0 - std::min(z, 1.0), static_cast<double>(q));
}

// Elementwise shrinkage policies mapping singular values s to a regularized
// pseudo-inverse s_hat_inv. Zero singular values always map to zero.
struct ShrinkagePolicy {
    enum class Kind { ridge, pca, gd_flow, gd_neumann };

    Kind kind = Kind::ridge;
    double lambda = 0.0;  // ridge
    double kappa = 0.0;   // pca hard threshold
    double alpha = 0.0;   // gd learning rate
    double q = 0.0;       // gd iterations; real for the flow form
    long q_int = 0;       // gd_neumann iteration count

    static ShrinkagePolicy ridge(double lambda) {
        if (lambda < 0.0) throw std::invalid_argument("ridge: lambda must be >= 0");
        ShrinkagePolicy p;
        p.kind = Kind::ridge;
        p.lambda = lambda;
        return p;
    }
    static ShrinkagePolicy pca(double kappa) {
        if (kappa < 0.0) throw std::invalid_argument("pca: kappa must be >= 0");
        ShrinkagePolicy p;
        p.kind = Kind::pca;
        p.kappa = kappa;
        return p;
    }
    static ShrinkagePolicy gd_flow(double alpha, double q) {
        if (!(alpha > 0.0) || !(q > 0.0)) throw std::invalid_argument("gd_flow: alpha and q must be > 0");
        ShrinkagePolicy p;
        p.kind = Kind::gd_flow;
        p.alpha = alpha;
        p.q = q;
        return p;
    }
    static ShrinkagePolicy gd_neumann(double alpha, long q) {
        if (!(alpha > 0.0) || q < 1) throw std::invalid_argument("gd_neumann: alpha must be > 0 and q >= 1");
        ShrinkagePolicy p;
        p.kind = Kind::gd_neumann;
        p.alpha = alpha;
        p.q_int = q;
        p.q = static_cast<double>(q);
        return p;
    }
};

struct ShrunkInverse {
    Vec s_hat_inv;
};

inline ShrunkInverse apply(const ShrinkagePolicy& policy, const SpectralDecomposition& sd) {
    const int r = sd.rank_dim();
    if (policy.kind == ShrinkagePolicy::Kind::gd_neumann && r > 0 &&
        policy.alpha * sd.s[0] * sd.s[0] > 1.0 + 1e-9)
        throw std::invalid_argument("apply: gd_neumann requires alpha * s_max^2 <= 1");

    Vec out(r);
    for (int k = 0; k < r; ++k) {
        const double s = sd.s[k];
        if (s <= 0.0) {
            out[k] = 0.0;  // pseudo-inverse convention
            continue;
        }
        switch (policy.kind) {
            case ShrinkagePolicy::Kind::ridge:
                out[k] = s / (s * s + policy.lambda);
                break;
            case ShrinkagePolicy::Kind::pca:
                out[k] = s >= policy.kappa ? 1.0 / s : 0.0;
                break;
            case ShrinkagePolicy::Kind::gd_flow:
                out[k] = mask_gd(s, policy.alpha, policy.q) / s;
                break;
            case ShrinkagePolicy::Kind::gd_neumann:
                out[k] = mask_gd_neumann(s, policy.alpha, policy.q_int) / s;
                break;
        }
    }
    return ShrunkInverse{std::move(out)};
}

// Closed-form regularized solution w = v * diag(s_hat_inv) * u^T * y.
inline Vec solve(const SpectralDecomposition& sd, const ShrinkagePolicy& policy, const Vec& y) {
    if (y.size() != sd.u.rows()) throw std::invalid_argument("solve: rhs length must equal sample count");
    const ShrunkInverse shrunk = apply(policy, sd);
    return sd.v * (shrunk.s_hat_inv.asDiagonal() * (sd.u.transpose() * y));
}

}  // namespace specbias
