#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "specbias/activation.hpp"

namespace specbias {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Sample coordinates x and bias positions b on [0, extent], both strictly
// increasing. The default layout places n and m equally spaced values that
// span the interval endpoints.
struct Grid1D {
    Vec x;
    Vec b;
    double extent = 1.0;

    static Grid1D uniform(int n, int m, double extent = 1.0) {
        if (n < 1 || m < 1) throw std::invalid_argument("Grid1D: n and m must be >= 1");
        if (!(extent > 0.0)) throw std::invalid_argument("Grid1D: extent must be > 0");
        Grid1D g;
        g.extent = extent;
        g.x = n == 1 ? Vec(Vec::Constant(1, 0.0)) : Vec(Vec::LinSpaced(n, 0.0, extent));
        g.b = m == 1 ? Vec(Vec::Constant(1, 0.0)) : Vec(Vec::LinSpaced(m, 0.0, extent));
        return g;
    }

    static Grid1D from_vectors(Vec x, Vec b, double extent) {
        Grid1D g{std::move(x), std::move(b), extent};
        g.validate();
        return g;
    }

    void validate() const {
        if (x.size() == 0 || b.size() == 0) throw std::invalid_argument("Grid1D: empty coordinate vector");
        for (int i = 1; i < x.size(); ++i)
            if (!(x[i] > x[i - 1])) throw std::invalid_argument("Grid1D: x not strictly increasing");
        for (int j = 1; j < b.size(); ++j)
            if (!(b[j] > b[j - 1])) throw std::invalid_argument("Grid1D: b not strictly increasing");
    }

    int n() const { return static_cast<int>(x.size()); }
    int m() const { return static_cast<int>(b.size()); }
};

// Design matrix a[i][j] = eta(sigma * (x_i - b_j)); row i is the feature
// vector of the network at sample x_i, so a equals the transposed Jacobian
// of the network output with respect to the weights.
struct DesignMatrix {
    Mat a;
    Grid1D grid;
    ActivationSpec activation;
};

inline DesignMatrix build(const Grid1D& grid, const ActivationSpec& activation) {
    grid.validate();
    const int n = grid.n();
    const int m = grid.m();
    Mat a(n, m);

    if (activation.kind == ActivationKind::impulse) {
        // Kronecker delta on grid indices: every sample-to-bias distance must
        // be an integer multiple of a common lattice step (zero included).
        const double tol = 1e-9 * std::max(grid.extent, 1.0);
        double step = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                const double d = std::abs(grid.x[i] - grid.b[j]);
                if (d > tol) step = std::min(step, d);
            }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) {
                const double d = std::abs(grid.x[i] - grid.b[j]);
                if (d <= tol) {
                    a(i, j) = 1.0;
                    continue;
                }
                if (std::abs(d - std::round(d / step) * step) > tol)
                    throw std::invalid_argument(
                        "build: impulse activation requires x and b to be index-aligned "
                        "subsets of a common grid");
                a(i, j) = 0.0;
            }
        }
    } else {
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i)
                a(i, j) = evaluate(activation, grid.x[i] - grid.b[j]);
    }

    if (!a.allFinite()) throw std::runtime_error("build: non-finite design matrix entry");
    return DesignMatrix{std::move(a), grid, activation};
}

inline Vec predict(const DesignMatrix& dm, const Vec& w) {
    if (w.size() != dm.a.cols())
        throw std::invalid_argument("predict: weight vector length must equal network width");
    return dm.a * w;
}

}  // namespace specbias
