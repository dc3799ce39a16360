// Command-line front end: reproducible figure/table pipelines over the
// library modules. CSV files are the contract; SVG plots are convenience.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "specbias/experiments.hpp"
#include "specbias/hyperparam.hpp"
#include "specbias/io/config.hpp"
#include "specbias/io/csv.hpp"
#include "specbias/io/manifest.hpp"
#include "specbias/io/policy.hpp"
#include "specbias/io/svg_plot.hpp"
#include "specbias/multidim.hpp"
#include "specbias/shrinkage.hpp"
#include "specbias/spectral.hpp"
#include "specbias/spline.hpp"
#include "specbias/trainer.hpp"

namespace fs = std::filesystem;
using namespace specbias;

namespace {

struct CommonOpts {
    std::string out_dir = "out";
    unsigned long seed = 0;
    std::string format = "csv";  // csv | both
    bool stamp = false;

    bool plots() const { return format == "both"; }

    std::string path(const std::string& name) const { return (fs::path(out_dir) / name).string(); }

    void prepare() const { fs::create_directories(out_dir); }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "seed for randomized inputs");
    cmd->add_option("--format", opts.format, "csv | both (both adds SVG plots)")
        ->check(CLI::IsMember({"csv", "both"}));
    cmd->add_flag("--stamp", opts.stamp, "embed a timestamp in plot titles");
}

std::string maybe_stamped(const CommonOpts& opts, std::string title) {
    if (opts.stamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), " [%Y-%m-%d %H:%M]", std::gmtime(&now));
        title += buf;
    }
    return title;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

// ---- spectrum ----------------------------------------------------------

struct SpectrumArgs {
    std::string act = "heaviside";
    double sigma = 1.0;
    int n = 512, m = 512;
    double extent = 1.0;
    CommonOpts common;
};

int run_spectrum(const SpectrumArgs& a) {
    a.common.prepare();
    const ActivationSpec spec(activation_from_string(a.act), a.sigma);
    const auto sd = decompose(build(Grid1D::uniform(a.n, a.m, a.extent), spec));
    const auto sp = spectrum(sd);

    const std::string csv_path = a.common.path("spectrum_" + a.act + ".csv");
    io::CsvWriter csv(csv_path, {"index", "value"});
    for (int k = 0; k < sp.normalized.size(); ++k) csv.write_row({static_cast<double>(k), sp.normalized[k]});

    io::RunManifest manifest("spectrum", a.common.seed);
    manifest.set_param("activation", a.act);
    manifest.set_param("sigma", a.sigma);
    manifest.set_param("n", static_cast<long>(a.n));
    manifest.set_param("m", static_cast<long>(a.m));
    manifest.set_param("extent", a.extent);
    manifest.add_output(csv_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Normalized singular values: " + a.act), "k", "s_k / s_0");
        plot.set_log_y(true);
        std::vector<double> xs, ys;
        for (int k = 0; k < sp.normalized.size(); ++k) {
            if (sp.normalized[k] <= 0) break;
            xs.push_back(k);
            ys.push_back(sp.normalized[k]);
        }
        plot.add_series(a.act, xs, ys);
        const std::string svg_path = a.common.path("spectrum_" + a.act + ".svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("spectrum_manifest.json"));
    return 0;
}

// ---- pcs ---------------------------------------------------------------

struct PcsArgs {
    std::string act = "heaviside";
    double sigma = 1.0;
    int n = 512, m = 512;
    std::string k_list = "0,4,5,9";
    CommonOpts common;
};

int run_pcs(const PcsArgs& a) {
    a.common.prepare();
    const auto ks = parse_int_list(a.k_list);
    const Grid1D grid = Grid1D::uniform(a.n, a.m);
    const auto sd = decompose(build(grid, ActivationSpec(activation_from_string(a.act), a.sigma)));

    const std::string csv_path = a.common.path("pcs_" + a.act + ".csv");
    std::vector<std::string> header{"x"};
    for (int k : ks) header.push_back("u" + std::to_string(k));
    io::CsvWriter csv(csv_path, header);
    std::vector<SampledFunction> comps;
    for (int k : ks) comps.push_back(principal_component_function(sd, k, grid));
    for (int i = 0; i < grid.n(); ++i) {
        std::vector<double> row{grid.x[i]};
        for (const auto& c : comps) row.push_back(c.values[i]);
        csv.write_row(row);
    }

    const std::string corr_path = a.common.path("pcs_" + a.act + "_dst.csv");
    io::CsvWriter corr(corr_path, {"k", "dst_correlation"});
    for (size_t i = 0; i < ks.size(); ++i) {
        const double c = dst_correlation(comps[i], ks[i]);
        corr.write_row({static_cast<double>(ks[i]), c});
        std::printf("k=%d dst_correlation=%.6f\n", ks[i], c);
    }

    io::RunManifest manifest("pcs", a.common.seed);
    manifest.set_param("activation", a.act);
    manifest.set_param("sigma", a.sigma);
    manifest.set_param("n", static_cast<long>(a.n));
    manifest.set_param("m", static_cast<long>(a.m));
    manifest.set_param("k", a.k_list);
    manifest.add_output(csv_path);
    manifest.add_output(corr_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Principal components: " + a.act), "x", "u_k(x)");
        for (size_t i = 0; i < ks.size(); ++i) {
            std::vector<double> xs(grid.x.data(), grid.x.data() + grid.n());
            std::vector<double> ys(comps[i].values.data(), comps[i].values.data() + grid.n());
            plot.add_series("k=" + std::to_string(ks[i]), xs, ys);
        }
        const std::string svg_path = a.common.path("pcs_" + a.act + ".svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("pcs_manifest.json"));
    return 0;
}

// ---- mask --------------------------------------------------------------

struct MaskArgs {
    double alpha = 1.0;
    double q = 100.0;
    int points = 400;
    CommonOpts common;
};

int run_mask(const MaskArgs& a) {
    a.common.prepare();
    const double kappa = kappa_from(a.alpha, a.q);
    const double lo = kappa / 100.0, hi = kappa * 100.0;

    const bool integral_q = std::abs(a.q - std::round(a.q)) < 1e-12 && a.q >= 1.0;
    const std::string csv_path = a.common.path("mask.csv");
    std::vector<std::string> header{"s", "mask_gd"};
    if (integral_q) header.push_back("mask_gd_neumann");
    io::CsvWriter csv(csv_path, header);

    std::vector<double> xs, ys;
    for (int i = 0; i < a.points; ++i) {
        const double s = lo * std::pow(hi / lo, static_cast<double>(i) / (a.points - 1));
        std::vector<double> row{s, mask_gd(s, a.alpha, a.q)};
        if (integral_q && a.alpha * s * s <= 1.0)
            row.push_back(mask_gd_neumann(s, a.alpha, static_cast<long>(std::llround(a.q))));
        csv.write_row(row);
        xs.push_back(s);
        ys.push_back(row[1]);
    }

    io::RunManifest manifest("mask", a.common.seed);
    manifest.set_param("alpha", a.alpha);
    manifest.set_param("q", a.q);
    manifest.set_param("kappa", kappa);
    manifest.set_param("rho", active_window_rho(a.q));
    manifest.add_output(csv_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Gradient mask"), "s", "m(s)");
        plot.set_log_x(true);
        plot.add_series("mask_gd", xs, ys);
        const std::string svg_path = a.common.path("mask.svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("mask_manifest.json"));
    std::printf("kappa=%.6g rho=%.6g grey_zone(0.99,0.01)=%.2f dB\n", kappa, active_window_rho(a.q),
                grey_zone_width_db(0.99, 0.01));
    return 0;
}

// ---- iters -------------------------------------------------------------

struct ItersArgs {
    std::string acts = "heaviside,tanh,relu,relu2";
    int kmax = 64;
    int n = 512, m = 512;
    double sigma = 0.0;  // 0: 2*kmax for scale-sensitive activations, 1 otherwise
    CommonOpts common;
};

int run_iters(const ItersArgs& a) {
    a.common.prepare();
    std::istringstream in(a.acts);
    std::string name;
    std::vector<std::pair<std::string, std::vector<double>>> curves;

    const std::string csv_path = a.common.path("iters.csv");
    io::CsvWriter csv(csv_path, {"activation", "K", "q"});

    io::RunManifest manifest("iters", a.common.seed);
    manifest.set_param("activations", a.acts);
    manifest.set_param("kmax", static_cast<long>(a.kmax));
    manifest.set_param("n", static_cast<long>(a.n));
    manifest.set_param("m", static_cast<long>(a.m));

    while (std::getline(in, name, ',')) {
        const ActivationKind kind = activation_from_string(name);
        double sigma = a.sigma;
        if (sigma <= 0.0) {
            // scale-sensitive activations get their transition matched to the
            // largest swept component index; the power family ignores sigma
            const bool scale_equivariant = kind == ActivationKind::heaviside ||
                                           kind == ActivationKind::relu ||
                                           kind == ActivationKind::relu2;
            sigma = scale_equivariant ? 1.0 : 2.0 * a.kmax;
        }
        const auto sd = decompose(build(Grid1D::uniform(a.n, a.m), ActivationSpec(kind, sigma)));
        std::vector<double> qs;
        for (int K = 0; K <= a.kmax && K < sd.rank_dim(); ++K) {
            const double q = iterations_for_K(sd, K);
            csv.write_row({name}, {static_cast<double>(K), q});
            qs.push_back(q);
        }
        curves.emplace_back(name, std::move(qs));
        manifest.set_param("sigma_" + name, sigma);
    }
    manifest.add_output(csv_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Iterations to keep K components"), "K", "q");
        plot.set_log_y(true);
        for (auto& [label, qs] : curves) {
            std::vector<double> xs(qs.size());
            for (size_t i = 0; i < qs.size(); ++i) xs[i] = static_cast<double>(i);
            plot.add_series(label, xs, qs);
        }
        const std::string svg_path = a.common.path("iters.svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("iters_manifest.json"));
    return 0;
}

// ---- spline ------------------------------------------------------------

struct SplineArgs {
    int m = 200;
    int r = 2;
    CommonOpts common;
};

int run_spline(const SplineArgs& a) {
    a.common.prepare();
    const auto fd = build_nabla(a.m, a.r);
    const std::vector<int> shifts{a.m / 4, a.m / 2, 3 * a.m / 4};
    const auto cols = inverse_columns(fd, shifts);

    const std::string cols_path = a.common.path("spline_columns_r" + std::to_string(a.r) + ".csv");
    std::vector<std::string> header{"x"};
    for (int m : shifts) {
        header.push_back("col" + std::to_string(m));
        header.push_back("fit" + std::to_string(m));
    }
    io::CsvWriter csv(cols_path, header);

    // least-squares scale per column against the analytic shifted activation
    std::vector<Vec> fits;
    for (size_t c = 0; c < shifts.size(); ++c) {
        const double bm = static_cast<double>(shifts[c]) / a.m;
        Vec analytic(a.m);
        for (int i = 0; i < a.m; ++i) {
            const double u = cols[c].x[i] - bm;
            analytic[i] = a.r == 1 ? (u > 0 ? 1.0 : 0.0) : (a.r == 2 ? std::max(u, 0.0) : std::pow(std::max(u, 0.0), 2));
        }
        const double theta = cols[c].values.dot(analytic) / analytic.squaredNorm();
        fits.push_back(theta * analytic);
    }
    for (int i = 0; i < a.m; ++i) {
        std::vector<double> row{cols[0].x[i]};
        for (size_t c = 0; c < shifts.size(); ++c) {
            row.push_back(cols[c].values[i]);
            row.push_back(fits[c][i]);
        }
        csv.write_row(row);
    }

    // equivalence report over the lambda grid on a noisy sinusoid, full grid
    std::mt19937_64 rng(a.common.seed);
    std::normal_distribution<double> noise(0.0, 0.05);
    Vec y(a.m);
    for (int i = 0; i < a.m; ++i) y[i] = std::sin(2.0 * M_PI * 3.0 * (i + 0.5) / a.m) + noise(rng);
    const auto dataset = GridDataset::full_grid(y);

    const std::string eq_path = a.common.path("spline_equivalence_r" + std::to_string(a.r) + ".csv");
    io::CsvWriter eq(eq_path, {"lambda", "rel_discrepancy", "data_rms_a", "data_rms_b", "roughness_a", "roughness_b"});
    for (double lambda : {1e-4, 1e-2, 1.0, 1e2}) {
        const auto rep = spline_objective_equivalence_check(a.m, a.r, lambda, dataset);
        eq.write_row({lambda, rep.rel_discrepancy, rep.data_rms_a, rep.data_rms_b, rep.roughness_a, rep.roughness_b});
    }

    io::RunManifest manifest("spline", a.common.seed);
    manifest.set_param("m", static_cast<long>(a.m));
    manifest.set_param("r", static_cast<long>(a.r));
    manifest.add_output(cols_path);
    manifest.add_output(eq_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Columns of the order-" + std::to_string(a.r) + " inverse"),
                         "x", "column value");
        for (size_t c = 0; c < shifts.size(); ++c) {
            std::vector<double> xs(cols[c].x.data(), cols[c].x.data() + a.m);
            std::vector<double> col(cols[c].values.data(), cols[c].values.data() + a.m);
            std::vector<double> fit(fits[c].data(), fits[c].data() + a.m);
            plot.add_series("col m=" + std::to_string(shifts[c]), xs, col);
            plot.add_series("analytic m=" + std::to_string(shifts[c]), xs, fit);
        }
        const std::string svg_path = a.common.path("spline_columns_r" + std::to_string(a.r) + ".svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("spline_manifest.json"));
    return 0;
}

// ---- reconstruct -------------------------------------------------------

struct ReconstructArgs {
    std::string config_path;
    CommonOpts common;
};

SignalSource signal_from_config(const io::Config& cfg) {
    const std::string kind = cfg.get_string("signal", "synthetic");
    if (kind == "csv") return SignalSource::csv(cfg.require_string("signal.path"));
    if (kind == "pgm")
        return SignalSource::pgm(cfg.require_string("signal.path"),
                                 static_cast<int>(cfg.get_long("signal.row", 100)));
    if (kind == "synthetic") {
        SynthSpec spec = SynthSpec::default_signal();
        if (cfg.has("synth.frequencies")) {
            spec.frequencies.clear();
            for (const auto& f : cfg.get_list("synth.frequencies")) spec.frequencies.push_back(std::stod(f));
            spec.amplitudes.clear();
            for (const auto& a : cfg.get_list("synth.amplitudes")) spec.amplitudes.push_back(std::stod(a));
        }
        spec.n = static_cast<int>(cfg.get_long("synth.n", spec.n));
        return SignalSource::synthetic(spec);
    }
    throw std::runtime_error("config: unknown signal kind '" + kind + "'");
}

int run_reconstruct(const ReconstructArgs& a) {
    a.common.prepare();
    const io::Config cfg = io::Config::parse_file(a.config_path);

    ExperimentConfig exp;
    exp.signal = signal_from_config(cfg);
    exp.activations.clear();
    for (const auto& name : cfg.get_list("activations")) exp.activations.push_back(activation_from_string(name));
    if (exp.activations.empty())
        exp.activations = {ActivationKind::tanh, ActivationKind::relu, ActivationKind::sinc,
                           ActivationKind::gaussian};
    if (cfg.has("k_values")) {
        exp.k_values.clear();
        for (const auto& k : cfg.get_list("k_values")) exp.k_values.push_back(std::stoi(k));
    }
    exp.width = static_cast<int>(cfg.get_long("width", exp.width));
    exp.sigma_fixed = cfg.get_double("sigma_fixed", 0.0);
    exp.q_fixed = cfg.get_double("q_fixed", 100.0);
    const std::string engine = cfg.get_string("engine", "mask");
    exp.iterate = engine == "iterate";
    if (engine == "policy") exp.fixed_policy = io::policy_from_config(cfg);
    exp.seed = a.common.seed;

    const std::string strategy = cfg.get_string("strategy", "both");
    std::vector<SweepStrategy> strategies;
    if (strategy == "vary_q" || strategy == "both") strategies.push_back(SweepStrategy::vary_q);
    if (strategy == "vary_sigma" || strategy == "both") strategies.push_back(SweepStrategy::vary_sigma);
    if (strategies.empty()) throw std::runtime_error("config: strategy must be vary_q, vary_sigma or both");

    io::RunManifest manifest("reconstruct", a.common.seed);
    manifest.set_param("config", a.config_path);
    for (const auto& [k, v] : cfg.values()) manifest.set_param("config." + k, v);

    for (SweepStrategy st : strategies) {
        exp.strategy = st;
        const auto results = reconstruct_sweep(exp);
        const std::string csv_path = a.common.path("reconstruct_" + to_string(st) + ".csv");
        io::CsvWriter csv(csv_path, {"activation", "K", "psnr_db", "baseline_psnr_db", "q", "sigma"});
        for (const auto& r : results)
            csv.write_row({r.activation}, {static_cast<double>(r.K), r.psnr_db, r.baseline_psnr_db, r.q, r.sigma});
        manifest.add_output(csv_path);

        if (a.common.plots()) {
            io::SvgPlot plot(maybe_stamped(a.common, "Reconstruction PSNR (" + to_string(st) + ")"), "K", "PSNR dB");
            std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> series;
            std::vector<double> bx, by;
            for (const auto& r : results) {
                series[r.activation].first.push_back(r.K);
                series[r.activation].second.push_back(r.psnr_db);
            }
            for (const auto& r : results) {
                if (r.activation == results.front().activation) {
                    bx.push_back(r.K);
                    by.push_back(r.baseline_psnr_db);
                }
            }
            plot.add_series("dst baseline", bx, by);
            for (auto& [label, xy] : series) plot.add_series(label, xy.first, xy.second);
            const std::string svg_path = a.common.path("reconstruct_" + to_string(st) + ".svg");
            plot.write(svg_path);
            manifest.add_output(svg_path);
        }
    }
    manifest.write(a.common.path("reconstruct_manifest.json"));
    return 0;
}

// ---- train -------------------------------------------------------------

struct TrainArgs {
    std::string act = "tanh";
    double sigma = 0.0;  // 0: use width
    int n = 256, m = 1024;
    double alpha = 0.0;  // 0: s_max^-2
    long q = 100;
    std::string signal_csv;
    CommonOpts common;
};

int run_train(const TrainArgs& a) {
    a.common.prepare();
    SignalSource src = a.signal_csv.empty()
                           ? SignalSource::synthetic([&] {
                                 SynthSpec s = SynthSpec::default_signal();
                                 s.n = a.n;
                                 return s;
                             }())
                           : SignalSource::csv(a.signal_csv);
    const Vec y = normalize_unit(resolve_signal(src));
    if (y.size() != a.n) throw std::runtime_error("train: signal length does not match --n");

    const double sigma = a.sigma > 0.0 ? a.sigma : static_cast<double>(a.m);
    Vec xs(a.n);
    for (int i = 0; i < a.n; ++i) xs[i] = (i + 0.5) / a.n;
    const Grid1D grid = Grid1D::from_vectors(xs, Vec::LinSpaced(a.m, 0.0, 1.0), 1.0);
    const DesignMatrix dm = build(grid, ActivationSpec(activation_from_string(a.act), sigma));

    double alpha = a.alpha;
    if (alpha <= 0.0) {
        const auto sd = decompose(dm);
        alpha = 1.0 / (sd.s[0] * sd.s[0]);
    }

    TrainerConfig cfg;
    cfg.alpha = alpha;
    cfg.q = a.q;
    const TrainResult res = train(dm, y, cfg);

    const std::string csv_path = a.common.path("train_residuals.csv");
    io::CsvWriter csv(csv_path, {"iteration", "residual"});
    for (long k = 0; k < res.residual_history.size(); ++k)
        csv.write_row({static_cast<double>(k + 1), res.residual_history[k]});

    io::RunManifest manifest("train", a.common.seed);
    manifest.set_param("activation", a.act);
    manifest.set_param("sigma", sigma);
    manifest.set_param("alpha", alpha);
    manifest.set_param("q", a.q);
    manifest.set_param("n", static_cast<long>(a.n));
    manifest.set_param("m", static_cast<long>(a.m));
    manifest.add_output(csv_path);

    if (a.common.plots()) {
        io::SvgPlot plot(maybe_stamped(a.common, "Training residual: " + a.act), "iteration", "||y - A w||");
        plot.set_log_y(true);
        std::vector<double> xs2, ys2;
        for (long k = 0; k < res.residual_history.size(); ++k) {
            xs2.push_back(static_cast<double>(k + 1));
            ys2.push_back(res.residual_history[k]);
        }
        plot.add_series(a.act, xs2, ys2);
        const std::string svg_path = a.common.path("train_residuals.svg");
        plot.write(svg_path);
        manifest.add_output(svg_path);
    }
    manifest.write(a.common.path("train_manifest.json"));
    std::printf("final residual=%.6g psnr=%.2f dB\n", res.residual_history[res.residual_history.size() - 1],
                psnr(y, dm.a * res.w));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral-bias laboratory for shallow networks"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "normalized singular-value spectrum of a design matrix");
    spectrum_cmd->add_option("--act", spectrum_args.act, "activation name");
    spectrum_cmd->add_option("--sigma", spectrum_args.sigma, "activation scale");
    spectrum_cmd->add_option("--n", spectrum_args.n, "sample count");
    spectrum_cmd->add_option("--m", spectrum_args.m, "network width");
    spectrum_cmd->add_option("--t", spectrum_args.extent, "domain extent");
    add_common(spectrum_cmd, spectrum_args.common);

    PcsArgs pcs_args;
    auto* pcs_cmd = app.add_subcommand("pcs", "principal components and their DST correlations");
    pcs_cmd->add_option("--act", pcs_args.act, "activation name");
    pcs_cmd->add_option("--sigma", pcs_args.sigma, "activation scale");
    pcs_cmd->add_option("--n", pcs_args.n, "sample count");
    pcs_cmd->add_option("--m", pcs_args.m, "network width");
    pcs_cmd->add_option("--k", pcs_args.k_list, "comma-separated component indices");
    add_common(pcs_cmd, pcs_args.common);

    MaskArgs mask_args;
    auto* mask_cmd = app.add_subcommand("mask", "gradient-descent shrinkage mask curve");
    mask_cmd->add_option("--alpha", mask_args.alpha, "learning rate");
    mask_cmd->add_option("--q", mask_args.q, "iteration count");
    mask_cmd->add_option("--points", mask_args.points, "samples along the curve");
    add_common(mask_cmd, mask_args.common);

    ItersArgs iters_args;
    auto* iters_cmd = app.add_subcommand("iters", "iteration-efficiency table q(K) per activation");
    iters_cmd->add_option("--acts", iters_args.acts, "comma-separated activation names");
    iters_cmd->add_option("--kmax", iters_args.kmax, "largest component index");
    iters_cmd->add_option("--n", iters_args.n, "sample count");
    iters_cmd->add_option("--m", iters_args.m, "network width");
    iters_cmd->add_option("--sigma", iters_args.sigma,
                          "scale for scale-sensitive activations (default n/16)");
    add_common(iters_cmd, iters_args.common);

    SplineArgs spline_args;
    auto* spline_cmd = app.add_subcommand("spline", "inverse finite-difference columns and objective equivalence");
    spline_cmd->add_option("--m", spline_args.m, "grid size");
    spline_cmd->add_option("--r", spline_args.r, "derivative order (1..3)");
    add_common(spline_cmd, spline_args.common);

    ReconstructArgs rec_args;
    auto* rec_cmd = app.add_subcommand("reconstruct", "signal reconstruction sweep from a config file");
    rec_cmd->add_option("--config", rec_args.config_path, "flat key = value config file")->required();
    add_common(rec_cmd, rec_args.common);

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "explicit gradient descent with residual history");
    train_cmd->add_option("--act", train_args.act, "activation name");
    train_cmd->add_option("--sigma", train_args.sigma, "activation scale (default: width)");
    train_cmd->add_option("--n", train_args.n, "sample count");
    train_cmd->add_option("--m", train_args.m, "network width");
    train_cmd->add_option("--alpha", train_args.alpha, "learning rate (default: s_max^-2)");
    train_cmd->add_option("--q", train_args.q, "iterations");
    train_cmd->add_option("--signal-csv", train_args.signal_csv, "single-column CSV signal");
    add_common(train_cmd, train_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
        if (pcs_cmd->parsed()) return run_pcs(pcs_args);
        if (mask_cmd->parsed()) return run_mask(mask_args);
        if (iters_cmd->parsed()) return run_iters(iters_args);
        if (spline_cmd->parsed()) return run_spline(spline_args);
        if (rec_cmd->parsed()) return run_reconstruct(rec_args);
        if (train_cmd->parsed()) return run_train(train_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
