#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbias/design_matrix.hpp"
#include "specbias/hyperparam.hpp"
#include "specbias/shrinkage.hpp"
#include "specbias/signal.hpp"
#include "specbias/spectral.hpp"
#include "specbias/trainer.hpp"

namespace specbias {

inline constexpr double kPsnrCapDb = 300.0;  // reported for an exact reconstruction

inline double psnr(const Vec& y, const Vec& y_hat, double peak = 1.0) {
    if (y.size() != y_hat.size()) throw std::invalid_argument("psnr: length mismatch");
    if (!(peak > 0.0)) throw std::invalid_argument("psnr: peak must be > 0");
    const double mse = (y - y_hat).squaredNorm() / static_cast<double>(y.size());
    if (mse <= 0.0) return kPsnrCapDb;
    return std::min(kPsnrCapDb, 10.0 * std::log10(peak * peak / mse));
}

struct DstFit {
    Vec reconstruction;
    double psnr_db = 0.0;
};

// Closed-form least-squares fit of y on the first K half-integer sine modes
// u_k(x) = sin(pi (k + 0.5) x), sampled where the signal lives: cell centers
// (i + 0.5) / N. On that grid the full K = N basis is orthogonal, so it spans
// the sample space exactly.
inline DstFit dst_baseline(const Vec& y, int K, double peak = 1.0) {
    const int n = static_cast<int>(y.size());
    if (K < 1 || K > n) throw std::invalid_argument("dst_baseline: K must lie in [1, N]");
    Mat basis(n, K);
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) / n;
        for (int k = 0; k < K; ++k) basis(i, k) = std::sin(M_PI * (k + 0.5) * x);
    }
    const Vec gamma = basis.householderQr().solve(y);
    Vec recon = basis * gamma;
    const double p = psnr(y, recon, peak);
    return DstFit{std::move(recon), p};
}

enum class SweepStrategy { vary_q, vary_sigma };

inline std::string to_string(SweepStrategy s) {
    return s == SweepStrategy::vary_q ? "vary_q" : "vary_sigma";
}

struct ReconstructionResult {
    int K = 0;
    double psnr_db = 0.0;
    SweepStrategy strategy = SweepStrategy::vary_q;
    std::string activation;
    double baseline_psnr_db = 0.0;
    double q = 0.0;      // iterations actually used
    double sigma = 0.0;  // scale actually used
};

struct ExperimentConfig {
    SignalSource signal;
    std::vector<ActivationKind> activations{ActivationKind::tanh, ActivationKind::relu,
                                            ActivationKind::sinc, ActivationKind::gaussian};
    std::vector<int> k_values{8, 16, 32, 64, 128};
    SweepStrategy strategy = SweepStrategy::vary_q;
    int width = 1024;          // network width M
    double sigma_fixed = 0.0;  // vary_q scale; 0 means "use width"
    double q_fixed = 100.0;    // vary_sigma iteration budget
    bool iterate = false;      // run explicit descent instead of the closed-form mask
    unsigned long seed = 0;    // reserved for randomized signal sources

    // When set, this policy replaces the strategy-derived gradient mask at
    // every sweep point (reference curves for ridge/pca/fixed-gd solves).
    std::optional<ShrinkagePolicy> fixed_policy;
};

namespace detail {

// Cell-centered sample coordinates paired with width equally spaced biases.
inline Grid1D reconstruction_grid(int n, int width) {
    Vec xs(n);
    for (int i = 0; i < n; ++i) xs[i] = (i + 0.5) / n;
    Grid1D g;
    g.extent = 1.0;
    g.x = std::move(xs);
    g.b = Vec::LinSpaced(width, 0.0, 1.0);
    return g;
}

inline Vec masked_solution(const DesignMatrix& dm, const SpectralDecomposition& sd, const Vec& y,
                           double alpha, double q, bool iterate) {
    if (!iterate) return solve(sd, ShrinkagePolicy::gd_flow(alpha, q), y);
    const long qi = std::lround(q);
    if (qi > 5'000'000)
        throw std::invalid_argument("reconstruct_sweep: explicit descent with q > 5e6; use the mask engine");
    TrainerConfig cfg;
    cfg.alpha = alpha;
    cfg.q = std::max<long>(qi, 1);
    return train(dm, y, cfg).w;
}

}  // namespace detail

// Reconstruction sweep over K for each activation, under one of two
// regularization strategies:
//   vary_q:     alpha = s_max^-2, q = s_max^2 / s_K^2, scale fixed
//   vary_sigma: alpha = s_max^-2, q fixed (default 100), scale = K
// Results always carry the DST baseline at the same K.
inline std::vector<ReconstructionResult> reconstruct_sweep(const ExperimentConfig& cfg) {
    const Vec y = normalize_unit(resolve_signal(cfg.signal));
    const int n = static_cast<int>(y.size());
    for (int K : cfg.k_values)
        if (K < 0 || K >= std::min(n, cfg.width))
            throw std::invalid_argument("reconstruct_sweep: K out of range for this signal/width");

    std::vector<double> baseline;
    baseline.reserve(cfg.k_values.size());
    for (int K : cfg.k_values) baseline.push_back(dst_baseline(y, K).psnr_db);

    std::vector<ReconstructionResult> results;
    for (ActivationKind kind : cfg.activations) {
        if (cfg.strategy == SweepStrategy::vary_q) {
            const double sigma = cfg.sigma_fixed > 0.0 ? cfg.sigma_fixed : static_cast<double>(cfg.width);
            const DesignMatrix dm = build(detail::reconstruction_grid(n, cfg.width), ActivationSpec(kind, sigma));
            const SpectralDecomposition sd = decompose(dm);
            const double alpha = 1.0 / (sd.s[0] * sd.s[0]);
            for (size_t i = 0; i < cfg.k_values.size(); ++i) {
                const int K = cfg.k_values[i];
                const double q = iterations_for_K(sd, K);
                const Vec w = cfg.fixed_policy ? solve(sd, *cfg.fixed_policy, y)
                                               : detail::masked_solution(dm, sd, y, alpha, q, cfg.iterate);
                results.push_back({K, psnr(y, dm.a * w), cfg.strategy, to_string(kind), baseline[i], q, sigma});
            }
        } else {
            for (size_t i = 0; i < cfg.k_values.size(); ++i) {
                const int K = cfg.k_values[i];
                const double sigma = static_cast<double>(K);
                const DesignMatrix dm = build(detail::reconstruction_grid(n, cfg.width), ActivationSpec(kind, sigma));
                const SpectralDecomposition sd = decompose(dm);
                const double alpha = 1.0 / (sd.s[0] * sd.s[0]);
                const Vec w = cfg.fixed_policy ? solve(sd, *cfg.fixed_policy, y)
                                               : detail::masked_solution(dm, sd, y, alpha, cfg.q_fixed, cfg.iterate);
                results.push_back({K, psnr(y, dm.a * w), cfg.strategy, to_string(kind), baseline[i], cfg.q_fixed, sigma});
            }
        }
    }
    return results;
}

}  // namespace specbias
