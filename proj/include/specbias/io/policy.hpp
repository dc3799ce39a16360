#pragma once

#include <string>

#include "specbias/io/config.hpp"
#include "specbias/shrinkage.hpp"

namespace specbias::io {

// Policy keys in a flat config: policy.kind plus the parameter that kind
// needs (lambda | kappa | alpha and q).
inline ShrinkagePolicy policy_from_config(const Config& cfg, const std::string& prefix = "policy.") {
    const std::string kind = cfg.require_string(prefix + "kind");
    if (kind == "ridge") return ShrinkagePolicy::ridge(cfg.get_double(prefix + "lambda", 0.0));
    if (kind == "pca") return ShrinkagePolicy::pca(cfg.get_double(prefix + "kappa", 0.0));
    if (kind == "gd" || kind == "gd_flow")
        return ShrinkagePolicy::gd_flow(cfg.get_double(prefix + "alpha", 1.0),
                                        cfg.get_double(prefix + "q", 1.0));
    if (kind == "gd_neumann")
        return ShrinkagePolicy::gd_neumann(cfg.get_double(prefix + "alpha", 1.0),
                                           cfg.get_long(prefix + "q", 1));
    throw std::runtime_error("config: unknown policy kind '" + kind + "'");
}

inline std::string to_string(const ShrinkagePolicy& p) {
    char buf[96];
    switch (p.kind) {
        case ShrinkagePolicy::Kind::ridge:
            std::snprintf(buf, sizeof(buf), "ridge(lambda=%g)", p.lambda);
            break;
        case ShrinkagePolicy::Kind::pca:
            std::snprintf(buf, sizeof(buf), "pca(kappa=%g)", p.kappa);
            break;
        case ShrinkagePolicy::Kind::gd_flow:
            std::snprintf(buf, sizeof(buf), "gd_flow(alpha=%g,q=%g)", p.alpha, p.q);
            break;
        case ShrinkagePolicy::Kind::gd_neumann:
            std::snprintf(buf, sizeof(buf), "gd_neumann(alpha=%g,q=%ld)", p.alpha, p.q_int);
            break;
    }
    return buf;
}

}  // namespace specbias::io
