#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include <lapacke.h>

#include "specbias/design_matrix.hpp"
#include "specbias/sampled_function.hpp"

namespace specbias {

// Thin SVD a = u * diag(s) * v^T with r = min(n, m) columns retained and
// singular values sorted descending. Columns are sign-normalized so the
// first entry of u_k with magnitude above 1e-12 is positive.
struct SpectralDecomposition {
    Mat u;  // n x r
    Vec s;  // r, descending, >= 0
    Mat v;  // m x r

    int rank_dim() const { return static_cast<int>(s.size()); }
};

inline SpectralDecomposition decompose(const Mat& a) {
    if (!a.allFinite()) throw std::invalid_argument("decompose: matrix has non-finite entries");
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    const int r = std::min(n, m);

    Mat work = a;  // dgesdd destroys its input
    SpectralDecomposition sd;
    sd.u.resize(n, r);
    sd.s.resize(r);
    Mat vt(r, m);

    const int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', n, m, work.data(), n,
                                    sd.s.data(), sd.u.data(), n, vt.data(), r);
    if (info != 0) throw std::runtime_error("decompose: SVD did not converge (dgesdd info=" + std::to_string(info) + ")");

    sd.v = vt.transpose();
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i < n; ++i) {
            const double e = sd.u(i, k);
            if (std::abs(e) > 1e-12) {
                if (e < 0.0) {
                    sd.u.col(k) = -sd.u.col(k);
                    sd.v.col(k) = -sd.v.col(k);
                }
                break;
            }
        }
    }
    return sd;
}

inline SpectralDecomposition decompose(const DesignMatrix& dm) { return decompose(dm.a); }

// Singular values divided by the leading one; starts at 1, non-increasing.
struct Spectrum {
    Vec normalized;
};

inline Spectrum spectrum(const SpectralDecomposition& sd) {
    if (sd.s.size() == 0 || !(sd.s[0] > 0.0))
        throw std::invalid_argument("spectrum: leading singular value must be positive");
    return Spectrum{sd.s / sd.s[0]};
}

inline SampledFunction principal_component_function(const SpectralDecomposition& sd, int k,
                                                    const Grid1D& grid) {
    if (k < 0 || k >= sd.rank_dim()) throw std::out_of_range("principal_component_function: index out of range");
    if (grid.x.size() != sd.u.rows())
        throw std::invalid_argument("principal_component_function: grid does not match decomposition rows");
    Vec values = sd.u.col(k);
    for (int i = 0; i < values.size(); ++i) {
        if (std::abs(values[i]) > 1e-12) {
            if (values[i] < 0.0) values = -values;
            break;
        }
    }
    return SampledFunction{grid.x, std::move(values)};
}

// |<u, d_k>| / (||u|| ||d_k||) against the half-integer sine mode
// d_k(x) = sin(pi (k + 0.5) x). Absolute value and normalization remove the
// arbitrary sign and scale of a singular vector.
inline double dst_correlation(const SampledFunction& component, int k) {
    if (k < 0) throw std::invalid_argument("dst_correlation: negative mode index");
    const Vec& u = component.values;
    Vec d(component.x.size());
    for (int i = 0; i < d.size(); ++i) d[i] = std::sin(M_PI * (k + 0.5) * component.x[i]);
    const double nu = u.norm();
    const double nd = d.norm();
    if (nu == 0.0 || nd == 0.0) return 0.0;
    return std::abs(u.dot(d)) / (nu * nd);
}

}  // namespace specbias
