#pragma once

#include <complex>
#include <Eigen/Dense>

namespace lobdk {

using cplx = std::complex<double>;

using Mat3    = Eigen::Matrix3cd;
using Vec3    = Eigen::Vector3cd;
using RowVec3 = Eigen::Matrix<cplx, 1, 3>;
using Mat10   = Eigen::Matrix<cplx, 10, 10>;
using Vec10   = Eigen::Matrix<cplx, 10, 1>;

// gamma = 1/sqrt(2), the constant appearing throughout the explicit equations
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Component layout shared by every module:
//   (Phi0, Phi1, Phi2, Phi3, E1, E2, E3, H1, H2, H3)
enum Component : int {
  kPhi0 = 0,
  kPhi1, kPhi2, kPhi3,
  kE1, kE2, kE3,
  kH1, kH2, kH3,
};

inline constexpr cplx kI{0.0, 1.0};

}  // namespace lobdk
