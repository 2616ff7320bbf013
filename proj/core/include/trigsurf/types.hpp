#pragma once

#include <Eigen/Core>
#include <complex>
#include <numbers>

namespace trigsurf {

using Complex = std::complex<double>;

/// A point in the unit hypercube [0,1)^n.
using Point = Eigen::VectorXd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace trigsurf
