#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>

#include "specbias/activation.hpp"
#include "specbias/spectral.hpp"

namespace specbias {

// Row-major integer lattice coordinates for an r x c grid: sample
// i = row * cols + col carries (row, col).
inline Mat grid2d(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid2d: rows and cols must be >= 1");
    Mat coords(static_cast<long>(rows) * cols, 2);
    for (int row = 0; row < rows; ++row)
        for (int col = 0; col < cols; ++col) {
            const long i = static_cast<long>(row) * cols + col;
            coords(i, 0) = row;
            coords(i, 1) = col;
        }
    return coords;
}

// Multidimensional design f(x) = w^T eta(V x - b): per-neuron direction
// vectors stacked as rows of V, plus the bias vector.
struct MultiDimDesign {
    enum class Init { rank_one, full_rank_random };

    Mat v_matrix;  // M x D
    Vec b;         // M
    Init init = Init::rank_one;

    // Zhang-style rank-one map v = [rows, 1]: injective on an r x c grid
    // whenever cols <= rows. Biases are spread evenly over the projected range.
    static MultiDimDesign rank_one(int rows, int cols, int width) {
        if (width < 2) throw std::invalid_argument("rank_one: width must be >= 2");
        MultiDimDesign d;
        d.init = Init::rank_one;
        d.v_matrix = Mat::Ones(width, 2);
        d.v_matrix.col(0).setConstant(static_cast<double>(rows));
        const double pmax = static_cast<double>(rows) * (rows - 1) + (cols - 1);
        d.b = Vec::LinSpaced(width, 0.0, pmax);
        return d;
    }

    // Rank-one variant with one neuron per grid row and biases sitting halfway
    // between consecutive row blocks of the projection, so every activation
    // response is literally constant along the column axis.
    static MultiDimDesign rank_one_row_aligned(int rows, int cols) {
        if (cols > rows)
            throw std::invalid_argument("rank_one_row_aligned: needs cols <= rows for block alignment");
        MultiDimDesign d;
        d.init = Init::rank_one;
        d.v_matrix = Mat::Ones(rows, 2);
        d.v_matrix.col(0).setConstant(static_cast<double>(rows));
        d.b.resize(rows);
        for (int j = 0; j < rows; ++j) d.b[j] = static_cast<double>(rows) * j - 0.5;
        return d;
    }

    // Entries drawn from N(0, 1)/sqrt(D); per-neuron biases interpolate the
    // neuron's own projected range so each unit is active inside the domain.
    static MultiDimDesign full_rank_random(const Mat& coords, int width, unsigned long seed) {
        if (width < 2) throw std::invalid_argument("full_rank_random: width must be >= 2");
        const int dim = static_cast<int>(coords.cols());
        MultiDimDesign d;
        d.init = Init::full_rank_random;
        d.v_matrix.resize(width, dim);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < width; ++j)
            for (int k = 0; k < dim; ++k) d.v_matrix(j, k) = scale * gauss(rng);
        d.b.resize(width);
        const Mat proj = coords * d.v_matrix.transpose();  // N x M
        for (int j = 0; j < width; ++j) {
            const double lo = proj.col(j).minCoeff();
            const double hi = proj.col(j).maxCoeff();
            d.b[j] = lo + (hi - lo) * static_cast<double>(j) / (width - 1);
        }
        return d;
    }
};

struct MultiDimDesignMatrix {
    Mat a;  // N x M, a[i][j] = eta(sigma (v_j . x_i - b_j))
    Mat coords;
    MultiDimDesign design;
    ActivationSpec activation;
};

inline bool projections_distinct(const Mat& coords, const Vec& v) {
    Vec p = coords * v;
    std::sort(p.data(), p.data() + p.size());
    for (long i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

inline MultiDimDesignMatrix build_multidim_design(const Mat& coords, const MultiDimDesign& md,
                                                  const ActivationSpec& activation) {
    if (coords.cols() != md.v_matrix.cols())
        throw std::invalid_argument("build_multidim_design: coordinate/V dimension mismatch");
    if (md.b.size() != md.v_matrix.rows())
        throw std::invalid_argument("build_multidim_design: bias/V width mismatch");
    if (!coords.allFinite()) throw std::invalid_argument("build_multidim_design: non-finite coordinates");

    const long n = coords.rows();
    const long m = md.v_matrix.rows();
    Mat a(n, m);
    const Mat proj = coords * md.v_matrix.transpose();
    for (long j = 0; j < m; ++j)
        for (long i = 0; i < n; ++i) a(i, j) = evaluate(activation, proj(i, j) - md.b[j]);
    if (!a.allFinite()) throw std::runtime_error("build_multidim_design: non-finite entry");
    return MultiDimDesignMatrix{std::move(a), coords, md, activation};
}

// Left singular vector k rendered as a rows x cols image (row-major order,
// matching grid2d).
inline Mat pc_image(const SpectralDecomposition& sd, int k, int rows, int cols) {
    if (k < 0 || k >= sd.rank_dim()) throw std::out_of_range("pc_image: component index out of range");
    if (static_cast<long>(rows) * cols != sd.u.rows())
        throw std::invalid_argument("pc_image: grid does not match decomposition rows");
    Vec col = sd.u.col(k);
    return Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        col.data(), rows, cols);
}

}  // namespace specbias
