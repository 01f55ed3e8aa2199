#pragma once

#include <Eigen/Dense>

namespace twf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace twf
