#pragma once

#include <Eigen/Dense>

namespace rclab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace rclab
