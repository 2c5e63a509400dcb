#include <doctest.h>

#include <cmath>
#include <random>

#include "lobdk/errors.hpp"
#include "lobdk/geometry.hpp"

using namespace lobdk;

TEST_CASE("frame at z = 0 is Minkowski with identity tetrad") {
  const FrameData fr = build_frame(0.0);
  CHECK(fr.metric.isApprox(Eigen::Vector4d(1, -1, -1, -1).asDiagonal().toDenseMatrix(), 0.0));
  CHECK(fr.tetrad_up.isIdentity(0.0));
}

TEST_CASE("frame at selected points") {
  CHECK(build_frame(std::log(2.0)).tetrad_up.diagonal().isApprox(Eigen::Vector4d(1, 2, 2, 1), 1e-15));
  CHECK(build_frame(-1.0).metric(1, 1) == doctest::Approx(-std::exp(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(build_frame(std::nan("")), InvalidInputError);
}

TEST_CASE("tetrad orthonormality over sampled z") {
  const Eigen::Matrix4d eta = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  for (double z : {-3.0, -0.7, 0.0, 1.3, 3.0}) {
    const FrameData fr = build_frame(z);
    const Eigen::Matrix4d g = fr.tetrad_up * fr.metric * fr.tetrad_up.transpose();
    CHECK((g - eta).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("christoffel symbols match the closed form") {
  const ConnectionData cd = christoffel_at(0.7);
  CHECK(cd.christoffel[0](0, 2) == -1.0);
  CHECK(cd.christoffel[0](2, 0) == -1.0);
  CHECK(cd.christoffel[1](1, 2) == -1.0);
  CHECK(cd.christoffel[2](0, 0) == doctest::Approx(std::exp(-1.4)).epsilon(1e-15));
  CHECK(christoffel_at(0.0).christoffel[2](0, 0) == doctest::Approx(1.0).epsilon(1e-15));

  // symmetry in the lower pair
  for (int i = 0; i < 3; ++i)
    CHECK((cd.christoffel[i] - cd.christoffel[i].transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ricci rotation table") {
  const ConnectionData cd = christoffel_at(1.9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const double expected = (a == 2 && b == 0 && c == 0)   ? -1.0
                                : (a == 1 && b == 2 && c == 1) ? 1.0
                                                               : 0.0;
        CHECK(cd.ricci_rotation[a][b][c] == expected);
      }
}

TEST_CASE("finite-difference oracle") {
  const ConnectionData o = christoffel_oracle(0.0, 1e-4);
  CHECK(std::abs(o.christoffel[2](0, 0) - 1.0) < 1e-7);
  CHECK(std::abs(o.christoffel[0](1, 1)) < 1e-7);

  const ConnectionData a = christoffel_at(1.0);
  const ConnectionData b = christoffel_oracle(1.0, 1e-5);
  for (int i = 0; i < 3; ++i)
    CHECK((a.christoffel[i] - b.christoffel[i]).cwiseAbs().maxCoeff() < 1e-6);

  CHECK_THROWS_AS(christoffel_oracle(0.0, 0.5), NumericRangeError);
  CHECK_THROWS_AS(christoffel_oracle(0.0, 0.0), NumericRangeError);
}

TEST_CASE("oracle agreement over random z") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int n = 0; n < 1000; ++n) {
    const double z = dist(rng);
    const ConnectionData a = christoffel_at(z);
    const ConnectionData o = christoffel_oracle(z, 1e-5);
    for (int i = 0; i < 3; ++i)
      CHECK((a.christoffel[i] - o.christoffel[i]).cwiseAbs().maxCoeff() < 1e-6);
  }
}
