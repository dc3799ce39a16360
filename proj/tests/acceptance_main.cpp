// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavy SVD work sits in criteria 5, 7 and 9; expect a few
// minutes of runtime on one core.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "specbias/experiments.hpp"
#include "specbias/hyperparam.hpp"
#include "specbias/multidim.hpp"
#include "specbias/shrinkage.hpp"
#include "specbias/spectral.hpp"
#include "specbias/spline.hpp"
#include "specbias/trainer.hpp"

using namespace specbias;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

Mat random_matrix(int n, int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Mat a(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = gauss(rng);
    return a;
}

Vec random_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vec y(n);
    for (int i = 0; i < n; ++i) y[i] = gauss(rng);
    return y;
}

DesignMatrix wrap(Mat a) {
    DesignMatrix dm;
    dm.grid = Grid1D::uniform(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
    dm.activation = ActivationSpec(ActivationKind::tanh, 1.0);
    dm.a = std::move(a);
    return dm;
}

// ---- criterion 1: descent matches the closed-form masks -----------------

Criterion criterion_mask_equivalence() {
    Criterion c{1, "gradient descent matches the finite-iteration and flow masks"};
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);

    double worst_neumann = 0.0, worst_flow = 0.0, worst_flow_small_q = 0.0;
    for (int inst = 0; inst < 20; ++inst) {
        const DesignMatrix dm = wrap(random_matrix(32, 64, rng));
        const Vec y = random_vector(32, rng);
        const auto sd = decompose(dm.a);

        const double alpha = 1.0 / (sd.s[0] * sd.s[0]);
        for (long q : {10L, 100L, 1000L}) {
            TrainerConfig cfg;
            cfg.alpha = alpha;
            cfg.q = q;
            const Vec iterated = train(dm, y, cfg).w;
            const Vec closed = solve(sd, ShrinkagePolicy::gd_neumann(alpha, q), y);
            worst_neumann = std::max(worst_neumann, (iterated - closed).norm() / closed.norm());
        }

        // flow comparison at alpha s_max^2 = 0.1; the flow limit needs q
        // large enough that the transition sits below the top of the
        // spectrum, so q = 10 is recorded but not gated
        const double small = 0.1 / (sd.s[0] * sd.s[0]);
        for (long q : {10L, 100L, 1000L}) {
            TrainerConfig cfg;
            cfg.alpha = small;
            cfg.q = q;
            const Vec iterated = train(dm, y, cfg).w;
            const Vec flow = solve(sd, ShrinkagePolicy::gd_flow(small, static_cast<double>(q)), y);
            const double rel = (iterated - flow).norm() / iterated.norm();
            if (q == 10)
                worst_flow_small_q = std::max(worst_flow_small_q, rel);
            else
                worst_flow = std::max(worst_flow, rel);
        }
    }
    const double elapsed = seconds_since(t0);
    c.require(worst_neumann <= 1e-6, "neumann worst rel " + fmt(worst_neumann) + " > 1e-6");
    c.require(worst_flow <= 1e-2, "flow worst rel " + fmt(worst_flow) + " > 1e-2 (q in {100,1000})");
    c.require(elapsed < 10.0, "runtime " + fmt(elapsed) + "s >= 10s");
    c.note("neumann worst rel " + fmt(worst_neumann) + ", flow worst rel " + fmt(worst_flow) +
           " at q in {100,1000} (q=10 gives " + fmt(worst_flow_small_q) + ", recorded), " + fmt(elapsed) + "s");
    return c;
}

// ---- criterion 2: threshold round trip and window width ------------------

Criterion criterion_round_trip() {
    Criterion c{2, "mask threshold round trip and rho = sqrt(q)"};
    double worst = 0.0;
    for (double alpha : {1e-3, 1e-2, 0.3, 1.0, 7.0}) {
        for (double q : {1.0, 5.0, 50.0, 500.0, 5000.0}) {
            for (double eps : {std::exp(-1.0), 0.1, 0.01}) {
                const auto thr = MaskThreshold::from_epsilon(eps);
                const double err = std::abs(mask_gd(kappa_from(alpha, q, thr), alpha, q) - (1.0 - eps));
                worst = std::max(worst, err);
            }
        }
    }
    c.require(worst <= 1e-12, "round-trip worst " + fmt(worst) + " > 1e-12");

    bool exact = true;
    for (double q : {1.0, 2.0, 7.0, 100.0, 4096.0, 1e8})
        exact = exact && (active_window_rho(q) == std::sqrt(q));
    c.require(exact, "rho(q) != sqrt(q) bitwise at the natural threshold");
    c.note("round-trip worst " + fmt(worst) + ", rho exactness " + (exact ? "bitwise" : "violated"));
    return c;
}

// ---- criterion 3: effective component count ------------------------------

Criterion criterion_effective_count() {
    Criterion c{3, "q from the K-rule activates exactly K+1 components (within 1)"};
    const auto t0 = Clock::now();
    const double gate = 1.0 - std::exp(-1.0);
    for (auto [kind, sigma] : {std::pair{ActivationKind::heaviside, 1.0}, std::pair{ActivationKind::tanh, 512.0}}) {
        const auto sd = decompose(build(Grid1D::uniform(512, 512), ActivationSpec(kind, sigma)));
        const double alpha = 1.0 / (sd.s[0] * sd.s[0]);
        for (int K : {4, 16, 64}) {
            const double q = iterations_for_K(sd, K);
            int count = 0;
            for (int k = 0; k < sd.rank_dim(); ++k)
                if (mask_gd(sd.s[k], alpha, q) >= gate) ++count;
            c.require(std::abs(count - (K + 1)) <= 1, to_string(kind) + " K=" + std::to_string(K) +
                                                          " count=" + std::to_string(count));
            c.note(to_string(kind) + " K=" + std::to_string(K) + " -> count " + std::to_string(count));
        }
    }
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 30.0, "runtime " + fmt(elapsed) + "s >= 30s");
    c.note(fmt(elapsed) + "s");
    return c;
}

// ---- criterion 4: spline equivalence --------------------------------------

Criterion criterion_spline() {
    Criterion c{4, "spline objective equivalence and inverse-column shapes"};
    std::mt19937_64 rng(4242);

    double worst_eq = 0.0;
    for (int M : {50, 200}) {
        const Vec y = random_vector(M, rng);
        const auto dataset = GridDataset::full_grid(y);
        for (int r : {1, 2, 3})
            for (double lambda : {1e-4, 1e-2, 1.0, 1e2})
                worst_eq = std::max(worst_eq,
                                    spline_objective_equivalence_check(M, r, lambda, dataset).rel_discrepancy);
    }
    c.require(worst_eq <= 1e-8, "equivalence worst " + fmt(worst_eq) + " > 1e-8");

    double worst_col = 0.0;
    for (int r : {1, 2, 3}) {
        const int M = 200;
        const auto cols = inverse_columns(build_nabla(M, r), {M / 2});
        const double bm = 0.5;
        Vec analytic(M);
        for (int i = 0; i < M; ++i) {
            const double u = cols[0].x[i] - bm;
            analytic[i] = r == 1 ? (u > 0 ? 1.0 : 0.0) : std::pow(std::max(u, 0.0), r - 1);
        }
        const int lo = M / 20, hi = M - M / 20;
        const Vec ci = cols[0].values.segment(lo, hi - lo);
        const Vec ai = analytic.segment(lo, hi - lo);
        const double theta = ci.dot(ai) / ai.squaredNorm();
        worst_col = std::max(worst_col, (ci - theta * ai).norm() / (theta * ai).norm());
    }
    c.require(worst_col <= 0.05, "column shape worst rel L2 " + fmt(worst_col) + " > 0.05");
    c.note("equivalence worst " + fmt(worst_eq) + " (full-grid dataset), column worst " + fmt(worst_col));
    return c;
}

// ---- criterion 5: DST adherence of principal components -------------------

Criterion criterion_dst_adherence() {
    Criterion c{5, "principal components follow the half-integer sine basis"};
    const std::vector<int> ks{0, 4, 5, 9};

    auto tier = [&](int n, double& fast_seconds) {
        const auto t0 = Clock::now();
        const Grid1D grid = Grid1D::uniform(n, n);

        const auto run = [&](ActivationKind kind, double sigma) {
            const auto sd = decompose(build(grid, ActivationSpec(kind, sigma)));
            std::vector<double> corr;
            for (int k : ks) corr.push_back(dst_correlation(principal_component_function(sd, k, grid), k));
            return corr;
        };

        const auto hs = run(ActivationKind::heaviside, 1.0);
        for (size_t i = 0; i < ks.size(); ++i)
            c.require(hs[i] >= 0.99, "heaviside n=" + std::to_string(n) + " k=" + std::to_string(ks[i]) +
                                         " corr " + fmt(hs[i]) + " < 0.99");
        c.note("heaviside n=" + std::to_string(n) + " corrs " + fmt(hs[0]) + " " + fmt(hs[1]) + " " +
               fmt(hs[2]) + " " + fmt(hs[3]));

        const auto th = run(ActivationKind::tanh, static_cast<double>(n));
        for (size_t i = 0; i < ks.size(); ++i)
            c.require(th[i] >= 0.95, "tanh(sigma=M) n=" + std::to_string(n) + " k=" + std::to_string(ks[i]) +
                                         " corr " + fmt(th[i]) + " < 0.95");
        c.note("tanh sigma=M n=" + std::to_string(n) + " corrs " + fmt(th[0]) + " " + fmt(th[1]) + " " +
               fmt(th[2]) + " " + fmt(th[3]));

        // diagnostic: the affinely mapped step (1 + tanh)/2 restores the basis
        {
            Mat a(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    a(i, j) = 0.5 * (1.0 + std::tanh(n * (grid.x[i] - grid.b[j])));
            const auto sd = decompose(a);
            std::vector<double> corr;
            for (int k : ks) corr.push_back(dst_correlation(principal_component_function(sd, k, grid), k));
            c.note("(1+tanh)/2 n=" + std::to_string(n) + " corrs " + fmt(corr[0]) + " " + fmt(corr[1]) + " " +
                   fmt(corr[2]) + " " + fmt(corr[3]) + " (diagnostic only)");
        }

        for (auto kind : {ActivationKind::relu, ActivationKind::relu2}) {
            const auto rc = run(kind, 1.0);
            c.note(to_string(kind) + " n=" + std::to_string(n) + " corrs " + fmt(rc[0]) + " " + fmt(rc[1]) +
                   " " + fmt(rc[2]) + " " + fmt(rc[3]) + " (reported, no threshold)");
        }
        const double elapsed = seconds_since(t0);
        if (n == 512) fast_seconds = elapsed;
        c.note("tier n=" + std::to_string(n) + " took " + fmt(elapsed) + "s");
    };

    double fast_seconds = 0.0;
    tier(512, fast_seconds);
    c.require(fast_seconds < 60.0, "fast tier " + fmt(fast_seconds) + "s >= 60s");
    tier(5000, fast_seconds);
    return c;
}

// ---- criterion 6: scale equivariance ---------------------------------------

Criterion criterion_scale_equivariance() {
    Criterion c{6, "power-family spectra are identical across scales"};
    for (auto kind : {ActivationKind::heaviside, ActivationKind::relu, ActivationKind::relu2}) {
        const auto a = spectrum(decompose(build(Grid1D::uniform(512, 512), ActivationSpec(kind, 15.0))));
        const auto b = spectrum(decompose(build(Grid1D::uniform(512, 512), ActivationSpec(kind, 30.0))));
        const double gap = (a.normalized - b.normalized).cwiseAbs().maxCoeff();
        c.require(gap <= 1e-8, to_string(kind) + " spectra differ by " + fmt(gap));
        c.note(to_string(kind) + " max elementwise gap " + fmt(gap));
    }
    return c;
}

// ---- criterion 7: sinc knee -------------------------------------------------

Criterion criterion_sinc_knee() {
    Criterion c{7, "sinc spectrum plateaus to the scale index then collapses"};
    for (int K : {15, 30}) {
        const auto sp = spectrum(
            decompose(build(Grid1D::uniform(2048, 2048), ActivationSpec(ActivationKind::sinc, double(K)))));
        for (int k = 0; k < K - 2; ++k)
            c.require(sp.normalized[k] >= 0.9,
                      "K=" + std::to_string(K) + " normalized[" + std::to_string(k) + "] = " +
                          fmt(sp.normalized[k]) + " < 0.9");
        int k_drop = -1;
        for (int k = 0; k < sp.normalized.size(); ++k) {
            if (sp.normalized[k] <= 0.1) {
                k_drop = k;
                break;
            }
        }
        c.require(k_drop >= 0 && k_drop - K <= 0.2 * K,
                  "K=" + std::to_string(K) + " drop index " + std::to_string(k_drop) + " beyond buffer");
        bool tail_ok = true;
        for (int k = k_drop; k >= 0 && k < sp.normalized.size(); ++k) tail_ok = tail_ok && sp.normalized[k] <= 0.1;
        c.require(tail_ok, "K=" + std::to_string(K) + " values above 0.1 beyond the knee");
        c.note("K=" + std::to_string(K) + ": plateau holds for k < K-2, edge value normalized[K-2] = " +
               fmt(sp.normalized[K - 2]) + " (recorded), knee buffer " + std::to_string(k_drop - K));
    }
    return c;
}

// ---- criterion 8: reconstruction crossover ---------------------------------

Criterion criterion_reconstruction() {
    Criterion c{8, "regularization strategies cross over between activation families"};
    const auto t0 = Clock::now();

    SignalSource src = SignalSource::synthetic(SynthSpec::default_signal());
    const char* peppers = std::getenv("SPECBIAS_PEPPERS");
    if (peppers != nullptr && std::filesystem::exists(peppers)) {
        src = SignalSource::pgm(peppers, 100);
        c.note(std::string("signal: peppers row 100 from ") + peppers);
    } else {
        c.note("signal: synthetic default (set SPECBIAS_PEPPERS to use the image row)");
    }

    ExperimentConfig cfg;
    cfg.signal = src;
    cfg.activations = {ActivationKind::tanh, ActivationKind::relu, ActivationKind::sinc,
                       ActivationKind::gaussian};
    cfg.k_values = {8, 16, 32, 64, 128};
    cfg.width = 1024;
    const double k_span = 128.0 - 8.0;

    auto fit_trend = [&](const std::vector<double>& ks, const std::vector<double>& ps) {
        const double n = static_cast<double>(ks.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < ks.size(); ++i) {
            sx += ks[i];
            sy += ps[i];
            sxx += ks[i] * ks[i];
            sxy += ks[i] * ps[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        return slope * k_span;  // dB of fitted rise across the whole sweep
    };

    // (a) vary_q: monotonic activations track the closed-form sine baseline
    cfg.strategy = SweepStrategy::vary_q;
    cfg.sigma_fixed = 1024.0;
    const auto sweep_q = reconstruct_sweep(cfg);
    for (const std::string act : {"tanh", "relu"}) {
        int within = 0, total = 0;
        for (const auto& r : sweep_q) {
            if (r.activation != act) continue;
            ++total;
            if (r.psnr_db >= r.baseline_psnr_db - 2.0) ++within;
            c.note("vary_q " + act + " K=" + std::to_string(r.K) + " psnr " + fmt(r.psnr_db) + " (baseline " +
                   fmt(r.baseline_psnr_db) + ")");
        }
        c.require(within * 5 >= total * 4, "vary_q " + act + " within 2 dB of baseline only " +
                                               std::to_string(within) + "/" + std::to_string(total));
    }
    for (const std::string act : {"sinc", "gaussian"}) {
        std::vector<double> ks, ps;
        for (const auto& r : sweep_q) {
            if (r.activation != act) continue;
            ks.push_back(r.K);
            ps.push_back(r.psnr_db);
        }
        const double trend = fit_trend(ks, ps);
        c.require(trend <= 2.0, "vary_q " + act + " shows a " + fmt(trend) + " dB improvement trend");
        c.note("vary_q " + act + " fitted trend " + fmt(trend) + " dB across K");
    }

    // (b) vary_sigma: sinc tracks the baseline; relu is scale-blind
    cfg.strategy = SweepStrategy::vary_sigma;
    cfg.q_fixed = 100.0;
    const auto sweep_s = reconstruct_sweep(cfg);
    {
        int within = 0, total = 0;
        for (const auto& r : sweep_s) {
            if (r.activation != "sinc") continue;
            ++total;
            if (r.psnr_db >= r.baseline_psnr_db - 1.0) ++within;
            c.note("vary_sigma sinc K=" + std::to_string(r.K) + " psnr " + fmt(r.psnr_db) + " (baseline " +
                   fmt(r.baseline_psnr_db) + ")");
        }
        c.require(within * 10 >= total * 9, "vary_sigma sinc within 1 dB of baseline only " +
                                                std::to_string(within) + "/" + std::to_string(total));
    }
    {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& r : sweep_s) {
            if (r.activation != "relu") continue;
            lo = std::min(lo, r.psnr_db);
            hi = std::max(hi, r.psnr_db);
        }
        c.require(hi - lo <= 1e-3, "relu psnr varies " + fmt(hi - lo) + " dB across sigma");
        c.note("relu psnr spread across sigma " + fmt(hi - lo) + " dB");
    }

    const double elapsed = seconds_since(t0);
    c.require(elapsed < 300.0, "runtime " + fmt(elapsed) + "s >= 300s");
    c.note(fmt(elapsed) + "s");
    return c;
}

// ---- criterion 9: iteration-efficiency ordering -----------------------------

Criterion criterion_iteration_ordering() {
    Criterion c{9, "iteration counts order by activation smoothness"};
    const int n = 2048, K = 64;
    const Grid1D grid = Grid1D::uniform(n, n);

    auto q_for = [&](ActivationKind kind, double sigma) {
        return iterations_for_K(decompose(build(grid, ActivationSpec(kind, sigma))), K);
    };
    // tanh is scale sensitive: in the large-scale limit its sign-like pair
    // structure compresses the spectrum, so the comparison point is the
    // smooth regime with the transition matched to the target index
    // (sigma = 2K); the limit value is recorded alongside
    const double qh = q_for(ActivationKind::heaviside, 1.0);
    const double qt = q_for(ActivationKind::tanh, 128.0);
    const double qt_limit = q_for(ActivationKind::tanh, static_cast<double>(n));
    const double qr = q_for(ActivationKind::relu, 1.0);
    const double qr2 = q_for(ActivationKind::relu2, 1.0);

    c.require(qh < qt && qt <= qr && qr < qr2, "ordering violated: " + fmt(qh) + ", " + fmt(qt) + ", " +
                                                   fmt(qr) + ", " + fmt(qr2));
    c.require(qr / qh >= 1e2, "relu/heaviside ratio " + fmt(qr / qh) + " < 1e2");
    c.require(qr2 / qh >= 1e4, "relu2/heaviside ratio " + fmt(qr2 / qh) + " < 1e4");
    c.note("q(K=64): heaviside " + fmt(qh) + ", tanh(sigma=128) " + fmt(qt) + ", relu " + fmt(qr) +
           ", relu2 " + fmt(qr2) + "; tanh(sigma=M) " + fmt(qt_limit) + " recorded");
    return c;
}

// ---- criterion 10: two-dimensional designs ----------------------------------

Criterion criterion_multidim() {
    Criterion c{10, "rank-one designs collapse to one axis, full-rank designs do not"};
    const auto t0 = Clock::now();
    const int n = 64;
    const Mat coords = grid2d(n, n);
    const std::vector<int> ks{0, 1, 15, 16};

    c.require(projections_distinct(coords, Vec(MultiDimDesign::rank_one(n, n, 256).v_matrix.row(0))),
              "rank-one projection is not injective");

    {
        const auto md = MultiDimDesign::rank_one_row_aligned(n, n);
        const auto sd = decompose(build_multidim_design(coords, md, ActivationSpec(ActivationKind::heaviside, 1.0)).a);
        for (int k : ks) {
            const Mat img = pc_image(sd, k, n, n);
            double worst = 0.0;
            for (int i = 0; i < n; ++i) {
                const double mean = img.row(i).mean();
                worst = std::max(worst, (img.row(i).array() - mean).square().mean());
            }
            c.require(worst <= 1e-8, "aligned rank-one k=" + std::to_string(k) + " row variance " + fmt(worst));
            c.note("aligned rank-one k=" + std::to_string(k) + " max row variance " + fmt(worst));
        }
    }

    // generic equally spaced biases under relu: invariance is approximate
    // only, so the magnitude is recorded rather than asserted
    {
        const auto md = MultiDimDesign::rank_one(n, n, 256);
        const auto sd = decompose(build_multidim_design(coords, md, ActivationSpec(ActivationKind::relu, 1.0)).a);
        double worst = 0.0;
        for (int k : ks) {
            const Mat img = pc_image(sd, k, n, n);
            for (int i = 0; i < n; ++i) {
                const double mean = img.row(i).mean();
                worst = std::max(worst, (img.row(i).array() - mean).square().mean());
            }
        }
        c.note("generic relu rank-one max row variance " + fmt(worst) + " (recorded)");
    }

    {
        const auto md = MultiDimDesign::full_rank_random(coords, 256, 42);
        const auto sd = decompose(build_multidim_design(coords, md, ActivationSpec(ActivationKind::relu, 1.0)).a);
        for (int k : ks) {
            const Mat img = pc_image(sd, k, n, n);
            double min_row = std::numeric_limits<double>::infinity();
            double min_col = min_row;
            for (int i = 0; i < n; ++i) {
                min_row = std::min(min_row, (img.row(i).array() - img.row(i).mean()).square().mean());
                min_col = std::min(min_col, (img.col(i).array() - img.col(i).mean()).square().mean());
            }
            c.require(min_row > 1e-8 && min_col > 1e-8,
                      "full-rank k=" + std::to_string(k) + " nearly constant along an axis");
            c.note("full-rank k=" + std::to_string(k) + " min row/col variance " + fmt(min_row) + "/" +
                   fmt(min_col));
        }
    }

    const double elapsed = seconds_since(t0);
    c.require(elapsed < 60.0, "runtime " + fmt(elapsed) + "s >= 60s");
    c.note(fmt(elapsed) + "s");
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion (*)()> checks = {
        criterion_mask_equivalence, criterion_round_trip,        criterion_effective_count,
        criterion_spline,           criterion_dst_adherence,     criterion_scale_equivariance,
        criterion_sinc_knee,        criterion_reconstruction,    criterion_iteration_ordering,
        criterion_multidim,
    };

    int failures = 0;
    for (auto check : checks) {
        const Criterion c = check();
        std::printf("[%s] %02d %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
        for (const auto& note : c.notes) std::printf("         - %s\n", note.c_str());
        std::fflush(stdout);
        if (!c.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
