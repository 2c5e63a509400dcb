#include "lobdk/radial.hpp"

#include <cmath>

#include "lobdk/errors.hpp"

namespace lobdk {

namespace {

bool is_integer_value(cplx w) {
  return w.imag() == 0.0 && w.real() == std::floor(w.real());
}

void require_transverse(const QuantumNumbers& q) {
  if (q.s() == 0.0)
    throw DegenerateTransverseMomentumError("radial: a = b = 0 is outside the reduction");
}

}  // namespace

SecondOrderODE radial_ode(const QuantumNumbers& q, RadialTag which) {
  SecondOrderODE ode;
  ode.which = which;
  ode.s_squared = q.s() * q.s();
  switch (which) {
    case RadialTag::H1:
      ode.p = -4.0;
      ode.c0 = 4.0 + (kI + q.sigma) * (kI + q.sigma);
      break;
    case RadialTag::H3:
      ode.p = -4.0;
      ode.c0 = 4.0 + (kI - q.sigma) * (kI - q.sigma);
      break;
    case RadialTag::Phi0:
      ode.p = -2.0;
      ode.c0 = q.epsilon * q.epsilon - q.mass * q.mass;
      break;
  }
  return ode;
}

cplx substitute_Z(const QuantumNumbers& q, double z) {
  require_transverse(q);
  return kI * q.s() * std::exp(z);
}

RadialEval radial_h1(const QuantumNumbers& q, int branch, double z) {
  require_transverse(q);
  const cplx mu = 1.0 - kI * q.sigma;
  if (branch < 0 && is_integer_value(mu) && mu.real() >= 0.0)
    throw UnavailableBranchError("radial_h1: J_{-mu} dependent on J_{mu} for integer mu");
  const cplx Z = substitute_Z(q, z);
  const cplx order = branch >= 0 ? mu : -mu;
  const BesselEval ev = bessel_j(order, Z);
  RadialEval out;
  out.h = ev.value;
  out.dh_dZ = ev.derivative;
  out.H = Z * Z * ev.value;
  out.dH_dz = 2.0 * Z * Z * ev.value + Z * Z * Z * ev.derivative;
  return out;
}

RadialEval companion_h3(const QuantumNumbers& q, int branch, double z) {
  require_transverse(q);
  const cplx mu = 1.0 - kI * q.sigma;
  const cplx Z = substitute_Z(q, z);
  const cplx ratio = cplx(q.a, q.b) / cplx(q.a, -q.b);
  const RadialEval r1 = radial_h1(q, branch, z);

  const cplx sig = q.sigma;
  // g3 = Z^2 h3
  const cplx g3 = ratio * (-2.0 * kI * sig * (Z * r1.dh_dZ + mu * r1.h) - Z * Z * r1.h);
  // h1'' from the order-mu Bessel equation
  const cplx order = branch >= 0 ? mu : -mu;
  const cplx h1pp = -r1.dh_dZ / Z - (1.0 - order * order / (Z * Z)) * r1.h;
  const cplx g3p = ratio * (-2.0 * kI * sig * ((1.0 + mu) * r1.dh_dZ + Z * h1pp) -
                            2.0 * Z * r1.h - Z * Z * r1.dh_dZ);

  RadialEval out;
  out.H = g3;
  out.h = g3 / (Z * Z);
  out.dh_dZ = (g3p - 2.0 * Z * out.h) / (Z * Z);
  out.dH_dz = Z * g3p;
  return out;
}

cplx companion_inverse_h1(const QuantumNumbers& q, cplx Z, cplx h3, cplx dh3_dZ) {
  require_transverse(q);
  const cplx nu = 1.0 + kI * q.sigma;
  const cplx ratio = cplx(q.a, -q.b) / cplx(q.a, q.b);
  return ratio * (2.0 * kI * q.sigma * (Z * dh3_dZ + nu * h3) - Z * Z * h3);
}

SigmaZeroResiduals sigma_zero_relations(const QuantumNumbers& q, const FieldComponents& f,
                                        Triple which) {
  require_transverse(q);
  f.validate();
  const int o = which == Triple::Phi ? kPhi1 : which == Triple::E ? kE1 : kH1;
  const std::size_t n = f.size();
  const cplx apb = cplx(q.a, q.b);
  const cplx amb = cplx(q.a, -q.b);

  SigmaZeroResiduals out;
  out.proportionality.resize(n);
  out.second_component.resize(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) scale = std::max(scale, std::abs(f.value[o + c][i]));

  for (std::size_t i = 0; i < n; ++i) {
    const cplx t1 = f.value[o][i], t2 = f.value[o + 1][i], t3 = f.value[o + 2][i];
    const cplx dt1 = f.deriv[o][i];
    out.proportionality[i] = std::abs(apb * t1 + amb * t3);
    const cplx pred = kI * std::exp(-f.z[i]) / (kInvSqrt2 * amb) * (dt1 - t1);
    out.second_component[i] = std::abs(t2 - pred);
    out.max_abs = std::max({out.max_abs, out.proportionality[i], out.second_component[i]});
  }
  out.max_rel = out.max_abs / std::max(scale, 1e-300);
  return out;
}

AmplitudeRelations sigma_nonzero_constraints(const QuantumNumbers& q) {
  if (!(q.mass > 0.0))
    throw InvalidInputError("sigma_nonzero_constraints: requires M > 0");
  const cplx rhs = cplx(q.epsilon * q.epsilon - q.mass * q.mass, 0.0);
  const cplx lhs = q.sigma * q.sigma;
  if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
    throw InconsistentQuantumNumbersError(
        "sigma_nonzero_constraints: sigma^2 != epsilon^2 - M^2");
  AmplitudeRelations rel;
  rel.sigma = q.sigma;
  rel.e_over_phi = -kI * q.epsilon / q.mass;
  rel.h_over_phi = q.sigma / q.mass;
  rel.phi0_vanishes = true;
  return rel;
}

cplx phi0_bessel_order(const QuantumNumbers& q) {
  return std::sqrt(cplx(1.0 - (q.epsilon * q.epsilon - q.mass * q.mass), 0.0));
}

FieldComponents phi0_mode(const QuantumNumbers& q, int bessel_branch,
                          const std::vector<double>& z_grid) {
  require_transverse(q);
  if (std::abs(q.sigma) != 0.0)
    throw InconsistentQuantumNumbersError("phi0_mode: requires sigma = 0");
  if (q.epsilon == 0.0) throw InvalidInputError("phi0_mode: requires epsilon != 0");
  const double c = q.epsilon * q.epsilon - q.mass * q.mass;
  if (c == 0.0)
    throw InconsistentQuantumNumbersError(
        "phi0_mode: epsilon^2 = M^2 makes the amplitude relations singular");

  const cplx lambda = phi0_bessel_order(q);
  if (bessel_branch < 0 && lambda.imag() == 0.0 && lambda.real() == std::floor(lambda.real()) &&
      lambda.real() > 0.0)
    throw UnavailableBranchError("phi0_mode: J_{-lambda} dependent on J_{lambda} for integer lambda");
  const cplx order = bessel_branch >= 0 ? lambda : -lambda;

  // normalize Phi0(0) = 1
  const cplx norm = bessel_j(order, substitute_Z(q, 0.0)).value;
  if (std::abs(norm) < 1e-280)
    throw NumericRangeError("phi0_mode: normalization point is a zero of the profile");

  const double g = kInvSqrt2;
  const double eps = q.epsilon, M = q.mass;
  const double s2 = q.s() * q.s();
  const cplx c1 = g * eps * cplx(q.a, -q.b) / c;   // Phi1 / (e^z Phi0)
  const cplx c3 = -g * eps * cplx(q.a, q.b) / c;   // Phi3 / (e^z Phi0)
  const cplx c2 = kI * eps / c;                    // Phi2 / Phi0'
  const cplx e_ratio = M / (kI * eps);             // E_j / Phi_j, from i eps E_j = M Phi_j

  FieldComponents f;
  f.resize(z_grid.size());
  f.z = z_grid;
  f.validate();

  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double z = z_grid[i];
    const double ez = std::exp(z);
    const cplx Z = substitute_Z(q, z);
    const BesselEval ev = bessel_j(order, Z);
    const cplx p0 = ez * ev.value / norm;
    const cplx dp0 = (ez * ev.value + ez * Z * ev.derivative) / norm;  // d/dz = Z d/dZ
    const cplx ddp0 = 2.0 * dp0 - (c - s2 * ez * ez) * p0;             // from the Phi0 equation

    f.value[kPhi0][i] = p0;
    f.deriv[kPhi0][i] = dp0;
    f.value[kPhi1][i] = c1 * ez * p0;
    f.deriv[kPhi1][i] = c1 * (ez * p0 + ez * dp0);
    f.value[kPhi2][i] = c2 * dp0;
    f.deriv[kPhi2][i] = c2 * ddp0;
    f.value[kPhi3][i] = c3 * ez * p0;
    f.deriv[kPhi3][i] = c3 * (ez * p0 + ez * dp0);
    for (int j = 0; j < 3; ++j) {
      f.value[kE1 + j][i] = e_ratio * f.value[kPhi1 + j][i];
      f.deriv[kE1 + j][i] = e_ratio * f.deriv[kPhi1 + j][i];
      f.value[kH1 + j][i] = 0.0;
      f.deriv[kH1 + j][i] = 0.0;
    }
  }
  return f;
}

}  // namespace lobdk
