#include "lobdk/geometry.hpp"

#include <cmath>

#include "lobdk/errors.hpp"

namespace lobdk {

FrameData build_frame(double z) {
  if (!std::isfinite(z)) throw InvalidInputError("build_frame: z must be finite");
  FrameData fr;
  fr.z = z;
  const double em2z = std::exp(-2.0 * z);
  fr.metric = Eigen::Vector4d(1.0, -em2z, -em2z, -1.0).asDiagonal();
  fr.tetrad_up = Eigen::Vector4d(1.0, std::exp(z), std::exp(z), 1.0).asDiagonal();
  fr.tetrad_down = Eigen::Vector4d(1.0, -std::exp(-z), -std::exp(-z), -1.0).asDiagonal();
  return fr;
}

static void fill_ricci(ConnectionData& cd) {
  for (auto& plane : cd.ricci_rotation)
    for (auto& row : plane)
      for (double& v : row) v = 0.0;
  // gamma_{311} = -1, gamma_{232} = +1, everything else zero.
  cd.ricci_rotation[2][0][0] = -1.0;
  cd.ricci_rotation[1][2][1] = 1.0;
}

ConnectionData christoffel_at(double z) {
  if (!std::isfinite(z)) throw InvalidInputError("christoffel_at: z must be finite");
  ConnectionData cd;
  const double em2z = std::exp(-2.0 * z);
  auto& [gx, gy, gz] = cd.christoffel;
  gx.setZero();
  gy.setZero();
  gz.setZero();
  gx(0, 2) = gx(2, 0) = -1.0;
  gy(1, 2) = gy(2, 1) = -1.0;
  gz(0, 0) = gz(1, 1) = em2z;
  fill_ricci(cd);
  return cd;
}

// Spatial block of the metric, g_ij = diag(-e^{-2z}, -e^{-2z}, -1).
static Eigen::Matrix3d spatial_metric(double z) {
  const double em2z = std::exp(-2.0 * z);
  return Eigen::Vector3d(-em2z, -em2z, -1.0).asDiagonal();
}

ConnectionData christoffel_oracle(double z, double h) {
  if (!std::isfinite(z)) throw InvalidInputError("christoffel_oracle: z must be finite");
  if (!(h > 0.0 && h < 0.1))
    throw NumericRangeError("christoffel_oracle: step must satisfy 0 < h < 0.1");

  // dg[l](j,k) = d g_jk / d x^l; the metric depends on z only.
  std::array<Eigen::Matrix3d, 3> dg;
  dg[0].setZero();
  dg[1].setZero();
  dg[2] = (spatial_metric(z + h) - spatial_metric(z - h)) / (2.0 * h);

  const Eigen::Matrix3d ginv = spatial_metric(z).inverse();
  ConnectionData cd;
  for (int i = 0; i < 3; ++i) {
    cd.christoffel[i].setZero();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double sum = 0.0;
        for (int l = 0; l < 3; ++l)
          sum += 0.5 * ginv(i, l) * (-dg[l](j, k) + dg[j](l, k) + dg[k](l, j));
        cd.christoffel[i](j, k) = sum;
      }
  }
  fill_ricci(cd);
  return cd;
}

}  // namespace lobdk
