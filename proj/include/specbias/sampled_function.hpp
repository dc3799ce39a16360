#pragma once

#include <Eigen/Dense>

namespace specbias {

// A discrete vector read as samples of a continuous function: values[i]
// lives at coordinate x[i].
struct SampledFunction {
    Eigen::VectorXd x;
    Eigen::VectorXd values;
};

}  // namespace specbias
