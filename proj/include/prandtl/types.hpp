/** \file types.hpp
 *  \brief Common scalar and dense linear-algebra typedefs.
 */
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace prandtl {

using Real = double;
using Complex = std::complex<double>;

using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr Real kPi = 3.1415926535897932384626433832795029;

}  // namespace prandtl
