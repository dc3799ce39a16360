#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbias::io {

// Minimal static line-chart emitter. CSV files are the contract; these SVGs
// exist so results can be eyeballed without an external plotting stack.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void set_log_x(bool on) { log_x_ = on; }
    void set_log_y(bool on) { log_y_ = on; }

    void add_series(const std::string& label, std::vector<double> x, std::vector<double> y) {
        if (x.size() != y.size()) throw std::invalid_argument("SvgPlot: series length mismatch");
        series_.push_back({label, std::move(x), std::move(y)});
    }

    void write(const std::string& path) const {
        if (series_.empty()) throw std::invalid_argument("SvgPlot: no series");
        double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
        bool first = true;
        for (const auto& s : series_) {
            for (size_t i = 0; i < s.x.size(); ++i) {
                const double px = tx(s.x[i]);
                const double py = ty(s.y[i]);
                if (!std::isfinite(px) || !std::isfinite(py)) continue;
                if (first) {
                    xmin = xmax = px;
                    ymin = ymax = py;
                    first = false;
                } else {
                    xmin = std::min(xmin, px);
                    xmax = std::max(xmax, px);
                    ymin = std::min(ymin, py);
                    ymax = std::max(ymax, py);
                }
            }
        }
        if (first) throw std::invalid_argument("SvgPlot: no finite points");
        if (xmax <= xmin) xmax = xmin + 1;
        if (ymax <= ymin) ymax = ymin + 1;

        const double W = 720, H = 480, L = 70, R = 170, T = 40, B = 50;
        const double pw = W - L - R, ph = H - T - B;
        auto X = [&](double v) { return L + (tx(v) - xmin) / (xmax - xmin) * pw; };
        auto Y = [&](double v) { return T + ph - (ty(v) - ymin) / (ymax - ymin) * ph; };

        std::ostringstream svg;
        svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
        svg << "<rect width='100%' height='100%' fill='white'/>\n";
        svg << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title_ << "</text>\n";
        svg << "<line x1='" << L << "' y1='" << T + ph << "' x2='" << L + pw << "' y2='" << T + ph
            << "' stroke='black'/>\n";
        svg << "<line x1='" << L << "' y1='" << T << "' x2='" << L << "' y2='" << T + ph << "' stroke='black'/>\n";
        svg << "<text x='" << L + pw / 2 << "' y='" << H - 12 << "' text-anchor='middle' font-size='12'>" << xlabel_
            << (log_x_ ? " (log10)" : "") << "</text>\n";
        svg << "<text x='16' y='" << T + ph / 2 << "' font-size='12' transform='rotate(-90 16 " << T + ph / 2 << ")'>"
            << ylabel_ << (log_y_ ? " (log10)" : "") << "</text>\n";

        for (int t = 0; t <= 4; ++t) {
            const double fx = xmin + (xmax - xmin) * t / 4.0;
            const double fy = ymin + (ymax - ymin) * t / 4.0;
            svg << "<text x='" << L + pw * t / 4.0 << "' y='" << T + ph + 16
                << "' text-anchor='middle' font-size='10'>" << round3(fx) << "</text>\n";
            svg << "<text x='" << L - 6 << "' y='" << T + ph - ph * t / 4.0 + 3
                << "' text-anchor='end' font-size='10'>" << round3(fy) << "</text>\n";
        }

        static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                       "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
        for (size_t si = 0; si < series_.size(); ++si) {
            const auto& s = series_[si];
            svg << "<polyline fill='none' stroke='" << colors[si % 8] << "' stroke-width='1.5' points='";
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(tx(s.x[i])) || !std::isfinite(ty(s.y[i]))) continue;
                svg << X(s.x[i]) << ',' << Y(s.y[i]) << ' ';
            }
            svg << "'/>\n";
            svg << "<text x='" << L + pw + 10 << "' y='" << T + 14 + 16.0 * si << "' font-size='11' fill='"
                << colors[si % 8] << "'>" << s.label << "</text>\n";
        }
        svg << "</svg>\n";

        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
        out << svg.str();
    }

  private:
    struct Series {
        std::string label;
        std::vector<double> x, y;
    };

    double tx(double v) const { return log_x_ ? std::log10(v) : v; }
    double ty(double v) const { return log_y_ ? std::log10(v) : v; }

    static std::string round3(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", v);
        return buf;
    }

    std::string title_, xlabel_, ylabel_;
    bool log_x_ = false, log_y_ = false;
    std::vector<Series> series_;
};

}  // namespace specbias::io
