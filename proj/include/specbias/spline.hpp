#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "specbias/sampled_function.hpp"

namespace specbias {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Discrete derivative operator of order r on an M-point grid over [0, T].
// The first-order matrix is the "same" convolution of the 2-tap filter
// [dx, -dx] with dx = T/M: row i computes dx * (f[i] - f[i-1]), and row 0
// keeps only the dx * f[0] term, which makes the matrix lower bidiagonal and
// nonsingular. Higher orders are literal powers of the first-order matrix.
// Note the filter carries a factor dx^2 relative to a difference quotient;
// column-shape comparisons absorb it through a fitted scale.
struct FiniteDifferenceMatrix {
    Mat nabla;  // M x M, order-r operator
    int r = 1;
    double dx = 0.0;

    int size() const { return static_cast<int>(nabla.rows()); }
};

inline FiniteDifferenceMatrix build_nabla(int M, int r, double T = 1.0) {
    if (M < 4) throw std::invalid_argument("build_nabla: M must be >= 4");
    if (r < 1 || r > 3) throw std::invalid_argument("build_nabla: r must be 1, 2 or 3");
    if (!(T > 0.0)) throw std::invalid_argument("build_nabla: T must be > 0");
    const double dx = T / M;

    Mat first = Mat::Zero(M, M);
    for (int i = 0; i < M; ++i) {
        first(i, i) = dx;
        if (i > 0) first(i, i - 1) = -dx;
    }
    Mat nabla = first;
    for (int k = 1; k < r; ++k) nabla = nabla * first;

    // Lower triangular with diagonal dx^r: singular only if dx underflows.
    if (!(std::pow(dx, r) > 0.0)) throw std::runtime_error("build_nabla: operator numerically singular");
    return FiniteDifferenceMatrix{std::move(nabla), r, dx};
}

// Columns of nabla^-r read as functions on [0, T]. A column is a staircase
// over grid cells, so it is sampled at cell midpoints (i + 0.5) * T / M;
// the matching analytic activation is shifted by b_m = m * T / M.
inline std::vector<SampledFunction> inverse_columns(const FiniteDifferenceMatrix& fd,
                                                    const std::vector<int>& indices) {
    const int M = fd.size();
    Vec xs(M);
    const double T = fd.dx * M;
    for (int i = 0; i < M; ++i) xs[i] = (i + 0.5) * T / M;

    std::vector<SampledFunction> out;
    out.reserve(indices.size());
    auto lower = fd.nabla.triangularView<Eigen::Lower>();
    for (int m : indices) {
        if (m < 0 || m >= M) throw std::out_of_range("inverse_columns: column index out of range");
        Vec e = Vec::Zero(M);
        e[m] = 1.0;
        Vec col = lower.solve(e);
        if (!col.allFinite()) throw std::runtime_error("inverse_columns: triangular solve failed");
        out.push_back(SampledFunction{xs, std::move(col)});
    }
    return out;
}

// Observations y at a subset of grid indices; the selector matrix D keeps
// the observed rows.
struct GridDataset {
    std::vector<int> indices;
    Vec y;

    static GridDataset full_grid(const Vec& y) {
        GridDataset d;
        d.indices.resize(y.size());
        for (int i = 0; i < y.size(); ++i) d.indices[i] = i;
        d.y = y;
        return d;
    }

    // Snap real coordinates in [0, T) onto the M-grid; off-grid points are
    // rejected rather than silently rounded.
    static GridDataset from_coordinates(const Vec& x, const Vec& y, int M, double T = 1.0) {
        if (x.size() != y.size()) throw std::invalid_argument("GridDataset: x/y length mismatch");
        GridDataset d;
        d.indices.reserve(x.size());
        for (int i = 0; i < x.size(); ++i) {
            const double pos = x[i] * M / T;
            const long idx = std::lround(pos);
            if (std::abs(pos - idx) > 1e-9 || idx < 0 || idx >= M)
                throw std::invalid_argument("GridDataset: coordinate off the M-grid");
            d.indices.push_back(static_cast<int>(idx));
        }
        d.y = y;
        return d;
    }
};

struct EquivalenceReport {
    double rel_discrepancy = 0.0;  // ||f_a - f_b|| / ||f_a||
    double data_rms_a = 0.0;
    double data_rms_b = 0.0;
    double roughness_a = 0.0;  // ||nabla^r f_a||
    double roughness_b = 0.0;
    Vec f_a;
    Vec f_b;
};

// Solves the r-th order smoothing objective two independent ways and reports
// how far apart the reconstructions land:
//   (a) in f:  min 0.5 ||y - D f||^2 + (lambda/2) ||nabla^r f||^2
//   (b) in w:  min 0.5 ||y - D nabla^-r w||^2 + (lambda/2) ||w||^2, f = nabla^-r w
// Both are solved as stacked least-squares problems. The change of variables
// is exact, so with a full-grid dataset the discrepancy sits at rounding
// level; sparse datasets leave near-flat directions that the two routes
// resolve differently (the report still quantifies the gap).
inline EquivalenceReport spline_objective_equivalence_check(int M, int r, double lambda,
                                                            const GridDataset& dataset,
                                                            double T = 1.0) {
    if (lambda < 0.0) throw std::invalid_argument("equivalence_check: lambda must be >= 0");
    const int n = static_cast<int>(dataset.indices.size());
    if (n == 0 || dataset.y.size() != n) throw std::invalid_argument("equivalence_check: empty or inconsistent dataset");
    if (lambda == 0.0 && n != M)
        throw std::invalid_argument("equivalence_check: lambda = 0 requires a full-grid dataset");
    for (int idx : dataset.indices)
        if (idx < 0 || idx >= M) throw std::invalid_argument("equivalence_check: dataset index off the grid");

    const FiniteDifferenceMatrix fd = build_nabla(M, r, T);
    Mat D = Mat::Zero(n, M);
    for (int i = 0; i < n; ++i) D(i, dataset.indices[i]) = 1.0;

    const double sq = std::sqrt(lambda);
    Vec rhs = Vec::Zero(n + M);
    rhs.head(n) = dataset.y;

    // route (a): f-space stack [D; sqrt(lambda) nabla^r]
    Mat Sa(n + M, M);
    Sa.topRows(n) = D;
    Sa.bottomRows(M) = sq * fd.nabla;
    Vec f_a = Sa.completeOrthogonalDecomposition().solve(rhs);

    // route (b): w-space stack [D nabla^-r; sqrt(lambda) I]
    Mat inv_cols = fd.nabla.triangularView<Eigen::Lower>().solve(Mat::Identity(M, M));
    Mat Sb(n + M, M);
    Sb.topRows(n) = D * inv_cols;
    Sb.bottomRows(M) = sq * Mat::Identity(M, M);
    Vec w = Sb.completeOrthogonalDecomposition().solve(rhs);
    Vec f_b = inv_cols * w;

    EquivalenceReport rep;
    rep.rel_discrepancy = (f_a - f_b).norm() / f_a.norm();
    rep.data_rms_a = std::sqrt((dataset.y - D * f_a).squaredNorm() / n);
    rep.data_rms_b = std::sqrt((dataset.y - D * f_b).squaredNorm() / n);
    rep.roughness_a = (fd.nabla * f_a).norm();
    rep.roughness_b = (fd.nabla * f_b).norm();
    rep.f_a = std::move(f_a);
    rep.f_b = std::move(f_b);
    return rep;
}

}  // namespace specbias
