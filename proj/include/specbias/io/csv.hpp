#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbias::io {

// %.17g keeps doubles round-trip exact and the output byte-stable.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open for writing: " + path);
        write_strings(header);
    }

    void write_strings(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    void write_row(const std::vector<double>& values) {
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << format_double(values[i]);
        }
        out_ << '\n';
    }

    // mixed row: leading label cells followed by numeric cells
    void write_row(const std::vector<std::string>& labels, const std::vector<double>& values) {
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i) out_ << ',';
            out_ << labels[i];
        }
        for (double v : values) out_ << ',' << format_double(v);
        out_ << '\n';
    }

  private:
    std::ofstream out_;
};

}  // namespace specbias::io
