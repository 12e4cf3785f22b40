#pragma once

#include <Eigen/Dense>

namespace opdyn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;
using Index = Eigen::Index;

}  // namespace opdyn
