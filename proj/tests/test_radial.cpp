#include <doctest.h>

#include <cmath>
#include <functional>

#include "lobdk/errors.hpp"
#include "lobdk/radial.hpp"

using namespace lobdk;

namespace {

// residual of u'' + p u' + q(z) u at z, second derivative by 4th-order FD of
// the analytic first derivative
double ode_residual(const SecondOrderODE& ode,
                    const std::function<RadialEval(double)>& eval, double z) {
  const double h = 1e-3;
  const cplx d2 = (-eval(z + 2 * h).dH_dz + 8.0 * eval(z + h).dH_dz - 8.0 * eval(z - h).dH_dz +
                   eval(z - 2 * h).dH_dz) /
                  (12.0 * h);
  const RadialEval r = eval(z);
  const cplx res = d2 + ode.p * r.dH_dz + ode.q(z) * r.H;
  const double scale = std::max({std::abs(d2), std::abs(ode.p * r.dH_dz),
                                 std::abs(ode.q(z) * r.H), 1e-300});
  return std::abs(res) / scale;
}

}  // namespace

TEST_CASE("second-order coefficients") {
  QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0, .sigma = cplx(0.0, 0.0)};
  const SecondOrderODE h1 = radial_ode(q, RadialTag::H1);
  CHECK(h1.p == -4.0);
  CHECK(std::abs(h1.c0 - cplx(3.0, 0.0)) < 1e-15);  // 4 + (i + 0)^2
  CHECK(h1.s_squared == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(h1.q(0.0) - (cplx(3.0, 0.0) - 2.0)) < 1e-15);

  const SecondOrderODE p0 = radial_ode(q, RadialTag::Phi0);
  CHECK(p0.p == -2.0);
  CHECK(std::abs(p0.c0 - cplx(16.0, 0.0)) < 1e-15);  // eps^2 - M^2

  // H3 equation is the H1 equation with sigma -> -sigma
  q.sigma = cplx(1.5, 0.0);
  const SecondOrderODE a3 = radial_ode(q, RadialTag::H3);
  q.sigma = cplx(-1.5, 0.0);
  const SecondOrderODE b1 = radial_ode(q, RadialTag::H1);
  CHECK(std::abs(a3.c0 - b1.c0) < 1e-15);
  CHECK(a3.p == b1.p);
}

TEST_CASE("variable change lands on the positive imaginary axis") {
  CHECK(substitute_Z(QuantumNumbers{.a = 3.0, .b = 4.0}, 0.0) == cplx(0.0, 5.0));
  CHECK(std::abs(substitute_Z(QuantumNumbers{.a = 1.0, .b = 0.0}, std::log(2.0)) - cplx(0.0, 2.0)) <
        1e-15);
  CHECK_THROWS_AS(substitute_Z(QuantumNumbers{.a = 0.0, .b = 0.0}, 0.0),
                  DegenerateTransverseMomentumError);
}

TEST_CASE("H1 solves its equation") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0, .sigma = cplx(4.0, 0.0)};
  const SecondOrderODE ode = radial_ode(q, RadialTag::H1);
  for (int branch : {+1, -1})
    for (double z : {-1.5, -0.4, 0.0, 0.9, 1.8})
      CHECK(ode_residual(ode, [&](double zz) { return radial_h1(q, branch, zz); }, z) < 1e-9);
  // small-Z leading behavior of the principal branch: h1 ~ (Z/2)^mu / Gamma(mu+1)
  const RadialEval tiny = radial_h1(QuantumNumbers{.a = 1e-6, .b = 0.0, .sigma = q.sigma}, +1, 0.0);
  const cplx mu = cplx(1.0, 0.0) - kI * q.sigma;
  const cplx lead = std::pow(cplx(0.0, 0.5e-6), mu) / gamma(mu + 1.0);
  CHECK(std::abs(tiny.h - lead) / std::abs(lead) < 1e-10);
}

TEST_CASE("companion H3 solves the mirrored equation") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0, .sigma = cplx(4.0, 0.0)};
  const SecondOrderODE ode = radial_ode(q, RadialTag::H3);
  for (int branch : {+1, -1})
    for (double z : {-1.2, 0.0, 0.6, 1.5})
      CHECK(ode_residual(ode, [&](double zz) { return companion_h3(q, branch, zz); }, z) < 1e-8);
}

TEST_CASE("companion relation round trip") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0, .sigma = cplx(4.0, 0.0)};
  for (double z : {-1.0, 0.0, 0.5, 1.3}) {
    const cplx Z = substitute_Z(q, z);
    const RadialEval r1 = radial_h1(q, +1, z);
    const RadialEval r3 = companion_h3(q, +1, z);
    const cplx back = companion_inverse_h1(q, Z, r3.h, r3.dh_dZ);
    CHECK(std::abs(back - r1.H) / std::abs(r1.H) < 1e-8);
  }
}

TEST_CASE("sigma = 0 degeneration of the companion") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 2.0, .mass = 5.0, .sigma = cplx(0.0, 0.0)};
  for (double z : {-0.8, 0.0, 1.1}) {
    const RadialEval r1 = radial_h1(q, +1, z);
    const RadialEval r3 = companion_h3(q, +1, z);
    // (a + ib) H1 = -(a - ib) H3
    const cplx lhs = cplx(q.a, q.b) * r1.H;
    const cplx rhs = -cplx(q.a, -q.b) * r3.H;
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
  }
}

TEST_CASE("integer-order branch degeneracy is refused") {
  // sigma = -i makes mu = 0; the minus branch duplicates the plus branch
  const QuantumNumbers q{.a = 1.0, .b = 0.0, .sigma = cplx(0.0, -1.0)};
  CHECK_THROWS_AS(radial_h1(q, -1, 0.0), UnavailableBranchError);
}

TEST_CASE("sigma != 0 amplitude constraints") {
  QuantumNumbers q{.epsilon = 5.0, .mass = 3.0, .sigma = cplx(4.0, 0.0)};
  const AmplitudeRelations rel = sigma_nonzero_constraints(q);
  CHECK(rel.phi0_vanishes);
  CHECK(std::abs(rel.h_over_phi - cplx(4.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(rel.e_over_phi - cplx(0.0, -5.0 / 3.0)) < 1e-15);

  q.sigma = cplx(3.9, 0.0);
  CHECK_THROWS_AS(sigma_nonzero_constraints(q), InconsistentQuantumNumbersError);
}

TEST_CASE("kernel of the amplitude system opens exactly at sigma^2 = eps^2 - M^2") {
  const double eps = 5.0, M = 3.0;
  auto det21 = [&](cplx sigma) {
    Mat3 m;
    m << -M, kI * eps, -sigma,
        -kI * eps, -M, 0.0,
        sigma, 0.0, -M;
    return m.determinant();
  };
  CHECK(std::abs(det21(cplx(4.0, 0.0))) < 1e-12);
  CHECK(std::abs(det21(cplx(-4.0, 0.0))) < 1e-12);
  CHECK(std::abs(det21(cplx(3.9, 0.0))) > 1.0);
  // closed form M (eps^2 - M^2 - sigma^2)
  CHECK(std::abs(det21(cplx(2.0, 0.0)) - M * (eps * eps - M * M - 4.0)) < 1e-12);
}

TEST_CASE("sigma = 0 triple relations hold on the constructed mode") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0};
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-1.5 + 3.0 * i / 40.0);
  const FieldComponents f = phi0_mode(q, +1, grid);
  for (Triple t : {Triple::Phi, Triple::E, Triple::H}) {
    const SigmaZeroResiduals r = sigma_zero_relations(q, f, t);
    CHECK(r.max_rel < 1e-8);
  }

  // zero triple is trivially consistent; a corrupted one is flagged
  FieldComponents g = f;
  for (auto& v : g.value[kH1]) v = 0.3;
  const SigmaZeroResiduals bad = sigma_zero_relations(q, g, Triple::H);
  CHECK(bad.max_rel > 1e-3);
}

TEST_CASE("phi0 mode structure") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0};
  CHECK(std::abs(phi0_bessel_order(q) - cplx(0.0, std::sqrt(15.0))) < 1e-13);

  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(-2.0 + 4.0 * i / 60.0);
  const FieldComponents f = phi0_mode(q, +1, grid);

  // normalization and amplitude ratios
  const std::size_t i0 = 30;  // z = 0
  CHECK(std::abs(f.value[kPhi0][i0] - cplx(1.0, 0.0)) < 1e-12);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // Phi1 / Phi3 = -(a - ib)/(a + ib)
    const cplx want = -cplx(q.a, -q.b) / cplx(q.a, q.b);
    CHECK(std::abs(f.value[kPhi1][i] / f.value[kPhi3][i] - want) < 1e-10);
    // E_j = -i (eps/M)^{-1}... E over Phi ratio = M/(i eps)
    CHECK(std::abs(f.value[kE2][i] - q.mass / (kI * q.epsilon) * f.value[kPhi2][i]) < 1e-12);
    CHECK(std::abs(f.value[kH1][i]) == 0.0);
    CHECK(std::abs(f.value[kH2][i]) == 0.0);
    CHECK(std::abs(f.value[kH3][i]) == 0.0);
  }

  // full ten-equation residual
  const ResidualReport rep = explicit_residuals(q, f);
  CHECK(rep.max_rel < 1e-8);

  // eps^2 = M^2 leaves no propagating scalar channel
  CHECK_THROWS_AS(phi0_mode(QuantumNumbers{.epsilon = 3.0, .a = 1.0, .b = 0.0, .mass = 3.0}, +1, grid),
                  InconsistentQuantumNumbersError);
}

TEST_CASE("phi0 branches are independent solutions") {
  const QuantumNumbers q{.epsilon = 5.0, .a = 1.0, .b = 1.0, .mass = 3.0};
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(-1.0 + 2.0 * i / 20.0);
  const FieldComponents fp = phi0_mode(q, +1, grid);
  const FieldComponents fm = phi0_mode(q, -1, grid);
  double wmin = 1e300;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cplx w = fp.value[kPhi0][i] * fm.deriv[kPhi0][i] - fm.value[kPhi0][i] * fp.deriv[kPhi0][i];
    wmin = std::min(wmin, std::abs(w));
  }
  CHECK(wmin > 1e-6);
}
