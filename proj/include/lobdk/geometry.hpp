#pragma once

// Quasi-cartesian chart of 3D Lobachevsky space (unit curvature radius):
//   dS^2 = dt^2 - e^{-2z}(dx^2 + dy^2) - dz^2
// Metric, tetrad, Christoffel symbols and Ricci rotation coefficients,
// plus a finite-difference oracle for the Christoffel symbols.

#include <array>
#include <Eigen/Dense>

namespace lobdk {

struct FrameData {
  double z = 0.0;
  Eigen::Matrix4d metric;       // g_{alpha beta}, diagonal
  Eigen::Matrix4d tetrad_up;    // e_(a)^beta
  Eigen::Matrix4d tetrad_down;  // e_(a)beta
};

struct ConnectionData {
  // Gamma^i_{jk} for i in {x,y,z}, stored over the lower pair (j,k).
  std::array<Eigen::Matrix3d, 3> christoffel;
  // Flat-index rotation coefficients gamma_{abc}, a,b,c in {1,2,3}
  // (stored 0-based).  All mixed 0-index entries vanish in this chart.
  double ricci_rotation[3][3][3];
};

FrameData build_frame(double z);

ConnectionData christoffel_at(double z);

// Central-difference evaluation of Gamma^i_{jk} = 1/2 g^{il}(-d_l g_jk + d_j g_lk + d_k g_lj).
// Cross-validation only; requires 0 < h < 0.1.
ConnectionData christoffel_oracle(double z, double h = 1e-4);

}  // namespace lobdk
