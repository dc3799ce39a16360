#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "specbias/design_matrix.hpp"

namespace specbias {

// Full-batch gradient descent on the least-squares loss
// E(w) = 0.5 ||y - A w||^2, used as the iterative ground truth against which
// the closed-form shrinkage masks are validated.
struct TrainerConfig {
    double alpha = 0.0;  // learning rate, > 0
    long q = 0;          // iteration count, >= 1
    Vec w0;              // initial weights; empty means all-zero
};

struct TrainResult {
    Vec w;
    Vec residual_history;  // residual_history[k] = ||y - A w_{k+1}||_2
};

inline Vec gd_step(const DesignMatrix& dm, const Vec& y, const Vec& w, double alpha) {
    if (y.size() != dm.a.rows() || w.size() != dm.a.cols())
        throw std::invalid_argument("gd_step: dimension mismatch");
    return w + alpha * (dm.a.transpose() * (y - dm.a * w));
}

inline TrainResult train(const DesignMatrix& dm, const Vec& y, const TrainerConfig& cfg) {
    if (!(cfg.alpha > 0.0) || cfg.q < 1)
        throw std::invalid_argument("train: alpha must be > 0 and q >= 1");
    if (y.size() != dm.a.rows()) throw std::invalid_argument("train: rhs length must equal sample count");
    Vec w = cfg.w0.size() == 0 ? Vec::Zero(dm.a.cols()) : cfg.w0;
    if (w.size() != dm.a.cols()) throw std::invalid_argument("train: w0 length must equal network width");

    Vec history(cfg.q);
    for (long k = 0; k < cfg.q; ++k) {
        const Vec residual = y - dm.a * w;
        w += cfg.alpha * (dm.a.transpose() * residual);
        history[k] = (y - dm.a * w).norm();
        if (k >= 10 && history[k] > 10.0 * history[k - 10])
            throw std::runtime_error("train: diverging (residual grew >10x over 10 steps at iteration " +
                                     std::to_string(k + 1) + "); reduce alpha below s_max^-2");
    }
    return TrainResult{std::move(w), std::move(history)};
}

}  // namespace specbias
