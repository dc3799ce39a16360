#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace specbias::io {

inline std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for checksum: " + path);
    std::uint64_t h = 14695981039346656037ull;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

// Every CLI run drops a manifest next to its outputs: the resolved
// parameters, the seed, and a checksum per artifact, so reruns can be
// compared byte for byte.
class RunManifest {
  public:
    RunManifest(std::string command, unsigned long seed) : command_(std::move(command)), seed_(seed) {}

    void set_param(const std::string& key, const std::string& value) { params_[key] = value; }
    void set_param(const std::string& key, double value) { params_[key] = format_double(value); }
    void set_param(const std::string& key, long value) { params_[key] = std::to_string(value); }

    void add_output(const std::string& path) { outputs_.push_back(path); }

    void write(const std::string& path) const {
        nlohmann::json j;
        j["command"] = command_;
        j["seed"] = seed_;
        j["parameters"] = params_;
        j["outputs"] = nlohmann::json::array();
        for (const auto& p : outputs_) {
            char hex[24];
            std::snprintf(hex, sizeof(hex), "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(p)));
            j["outputs"].push_back({{"path", p}, {"fnv1a64", hex}});
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
        out << j.dump(2) << '\n';
    }

  private:
    static std::string format_double(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    std::string command_;
    unsigned long seed_;
    std::map<std::string, std::string> params_;
    std::vector<std::string> outputs_;
};

}  // namespace specbias::io
