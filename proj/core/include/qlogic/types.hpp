#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qlogic {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Entrywise equality / norm-deviation tolerance.
inline constexpr double kTolerance = 1e-9;

// Rank decisions (Gram-Schmidt rejection, intersection eigenvalue cut) need
// more slack than entrywise equality.
inline constexpr double kRankTolerance = 1e-7;

}  // namespace qlogic
