#pragma once

#include <cmath>
#include <stdexcept>

#include "specbias/shrinkage.hpp"
#include "specbias/spectral.hpp"

namespace specbias {

// Mask threshold epsilon in (0, 1): the singular value kappa solving
// m_gd(kappa; alpha, q) = 1 - epsilon. Stored as -log(epsilon) so that the
// default (epsilon = 1/e) keeps the window algebra exact: rho(q) == sqrt(q).
class MaskThreshold {
  public:
    static MaskThreshold natural() { return MaskThreshold(1.0); }

    static MaskThreshold from_epsilon(double epsilon) {
        if (!(epsilon > 0.0) || !(epsilon < 1.0))
            throw std::invalid_argument("MaskThreshold: epsilon must lie in (0, 1)");
        return MaskThreshold(-std::log(epsilon));
    }

    double epsilon() const { return std::exp(-neg_log_); }
    double neg_log() const { return neg_log_; }

  private:
    explicit MaskThreshold(double neg_log) : neg_log_(neg_log) {}
    double neg_log_;
};

// kappa = sqrt(-log(eps) / (alpha q)): the singular value where the gradient
// mask crosses 1 - eps.
inline double kappa_from(double alpha, double q, const MaskThreshold& eps = MaskThreshold::natural()) {
    if (!(alpha > 0.0) || !(q > 0.0)) throw std::invalid_argument("kappa_from: alpha and q must be > 0");
    return std::sqrt(eps.neg_log() / (alpha * q));
}

// Iterations needed so that, at learning rate alpha = s_max^-2, the mask at
// s_K equals 1 - 1/e: q = s_max^2 / s_K^2.
inline double iterations_for_K(const SpectralDecomposition& sd, int K) {
    if (K < 0 || K >= sd.rank_dim()) throw std::out_of_range("iterations_for_K: K out of range");
    if (!(sd.s[K] > 0.0))
        throw std::invalid_argument("iterations_for_K: s_K = 0 requires unbounded iterations");
    const double ratio = sd.s[0] / sd.s[K];
    return ratio * ratio;
}

// Width of the mask's active window, s_max / s(eps) = sqrt(q / -log(eps)).
inline double active_window_rho(double q, const MaskThreshold& eps = MaskThreshold::natural()) {
    if (!(q > 0.0)) throw std::invalid_argument("active_window_rho: q must be > 0");
    return std::sqrt(q / eps.neg_log());
}

// Size of the mask's grey zone in decibels: 20 log10(s_hi / s_lo) where the
// mask equals hi at s_hi and lo at s_lo. Both thresholds scale s by the same
// sqrt(alpha q), so the width is independent of the hyperparameters.
inline double grey_zone_width_db(double hi, double lo) {
    if (!(hi > 0.0 && hi < 1.0 && lo > 0.0 && lo < 1.0))
        throw std::invalid_argument("grey_zone_width_db: thresholds must lie in (0, 1)");
    if (!(hi > lo)) throw std::invalid_argument("grey_zone_width_db: hi must exceed lo");
    const double shi2 = -std::log1p(-hi);  // alpha q s_hi^2
    const double slo2 = -std::log1p(-lo);
    return 10.0 * std::log10(shi2 / slo2);
}

// Retained components for a signal of bandwidth B: K = 2B - 0.5. The slow
// mask transition makes K ~ 2B an acceptable approximation in practice.
inline double bandwidth_to_K(double B) {
    if (!(B > 0.0)) throw std::invalid_argument("bandwidth_to_K: B must be > 0");
    return 2.0 * B - 0.5;
}

}  // namespace specbias
