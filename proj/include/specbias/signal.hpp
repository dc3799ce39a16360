#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbias {

using Vec = Eigen::VectorXd;

// Synthetic multi-sine: y(x) = sum_j amplitudes[j] * sin(2 pi frequencies[j] x)
// sampled at n cell-centered points on [0, 1].
struct SynthSpec {
    std::vector<double> frequencies;
    std::vector<double> amplitudes;
    int n = 256;

    // Default test signal: six components with decaying amplitudes and
    // frequencies spread off the reconstruction bases' bins.
    static SynthSpec default_signal() {
        SynthSpec s;
        s.frequencies = {0.5, 3.3, 9.7, 23.1, 51.3, 97.7};
        s.amplitudes = {0.45, 0.30, 0.18, 0.10, 0.05, 0.025};
        s.n = 256;
        return s;
    }
};

struct SignalSource {
    enum class Kind { csv_vector, pgm_row, synthetic };

    Kind kind = Kind::synthetic;
    std::string path;
    int row_index = 0;
    SynthSpec synth = SynthSpec::default_signal();

    static SignalSource csv(std::string path) {
        SignalSource s;
        s.kind = Kind::csv_vector;
        s.path = std::move(path);
        return s;
    }
    static SignalSource pgm(std::string path, int row) {
        SignalSource s;
        s.kind = Kind::pgm_row;
        s.path = std::move(path);
        s.row_index = row;
        return s;
    }
    static SignalSource synthetic(SynthSpec spec) {
        SignalSource s;
        s.kind = Kind::synthetic;
        s.synth = std::move(spec);
        return s;
    }
};

namespace detail {

inline Vec load_csv_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    std::vector<double> vals;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // single column; tolerate a trailing comma or a header line
        try {
            vals.push_back(std::stod(line));
        } catch (const std::exception&) {
            if (vals.empty()) continue;  // header
            throw std::runtime_error("malformed CSV line in " + path + ": " + line);
        }
    }
    if (vals.empty()) throw std::runtime_error("CSV file holds no samples: " + path);
    return Eigen::Map<Vec>(vals.data(), static_cast<long>(vals.size()));
}

// Plain PGM, binary (P5) or ASCII (P2), maxval <= 65535.
inline Vec load_pgm_row(const std::string& path, int row) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + path);

    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5") throw std::runtime_error("not a plain PGM (P2/P5) file: " + path);

    auto next_token = [&in, &path]() -> long {
        // skip whitespace and # comments
        while (true) {
            int c = in.peek();
            if (c == '#') {
                std::string skip;
                std::getline(in, skip);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        long v;
        if (!(in >> v)) throw std::runtime_error("truncated PGM header: " + path);
        return v;
    };

    const long width = next_token();
    const long height = next_token();
    const long maxval = next_token();
    if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535)
        throw std::runtime_error("unsupported PGM geometry in " + path);
    if (row < 0 || row >= height) throw std::runtime_error("PGM row index out of range: " + path);

    Vec out(width);
    if (magic == "P2") {
        for (long i = 0; i < height * width; ++i) {
            long v;
            if (!(in >> v)) throw std::runtime_error("truncated PGM data: " + path);
            if (i / width == row) out[i % width] = static_cast<double>(v);
        }
    } else {
        in.get();  // single whitespace after maxval
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf(static_cast<size_t>(width) * bytes);
        in.seekg(static_cast<std::streamoff>(row) * width * bytes, std::ios::cur);
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
            throw std::runtime_error("truncated PGM data: " + path);
        for (long j = 0; j < width; ++j)
            out[j] = bytes == 1 ? buf[j] : 256.0 * buf[2 * j] + buf[2 * j + 1];
    }
    return out;
}

}  // namespace detail

inline Vec resolve_signal(const SignalSource& src) {
    switch (src.kind) {
        case SignalSource::Kind::csv_vector: return detail::load_csv_vector(src.path);
        case SignalSource::Kind::pgm_row: return detail::load_pgm_row(src.path, src.row_index);
        case SignalSource::Kind::synthetic: {
            const SynthSpec& sp = src.synth;
            if (sp.frequencies.size() != sp.amplitudes.size() || sp.n < 2)
                throw std::invalid_argument("SynthSpec: frequency/amplitude mismatch or n < 2");
            Vec y = Vec::Zero(sp.n);
            for (int i = 0; i < sp.n; ++i) {
                const double x = (i + 0.5) / sp.n;
                for (size_t j = 0; j < sp.frequencies.size(); ++j)
                    y[i] += sp.amplitudes[j] * std::sin(2.0 * M_PI * sp.frequencies[j] * x);
            }
            return y;
        }
    }
    throw std::logic_error("resolve_signal: unknown source kind");
}

// Min-max rescale onto [0, 1]; constant signals map to all-zero.
inline Vec normalize_unit(const Vec& y) {
    const double lo = y.minCoeff();
    const double hi = y.maxCoeff();
    if (!(hi > lo)) return Vec::Zero(y.size());
    return (y.array() - lo) / (hi - lo);
}

}  // namespace specbias
