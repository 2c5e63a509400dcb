#pragma once

// Reduction chain for the z-profiles:
//   - second-order ODEs for H1, H3 and (sigma = 0) Phi0,
//   - variable change Z = i sqrt(a^2+b^2) e^z and Bessel solutions,
//   - companion relation h1 -> h3 and its inverse,
//   - sigma = 0 proportionality relations,
//   - sigma != 0 algebraic amplitude constraints,
//   - the sigma = 0 massive mode built from Phi0.

#include <vector>

#include "lobdk/special_functions.hpp"
#include "lobdk/wave_system.hpp"

namespace lobdk {

enum class RadialTag { H1, H3, Phi0 };

// u'' + p u' + q(z) u = 0 with q(z) = -[e^{2z}(a^2+b^2) - c0].
struct SecondOrderODE {
  RadialTag which = RadialTag::H1;
  double p = 0.0;
  cplx c0{0.0, 0.0};
  double s_squared = 0.0;

  cplx q(double z) const { return -(std::exp(2.0 * z) * s_squared - c0); }
};

SecondOrderODE radial_ode(const QuantumNumbers& q, RadialTag which);

// Z = i sqrt(a^2+b^2) e^z, on the positive imaginary axis.
cplx substitute_Z(const QuantumNumbers& q, double z);

struct RadialEval {
  cplx h;       // Bessel-equation solution h(Z)
  cplx dh_dZ;
  cplx H;       // Z^2 h
  cplx dH_dz;   // via d/dz = Z d/dZ
};

// h1 = J_{branch * mu}(Z), mu = 1 - i sigma; H1 = Z^2 h1.  branch is +1 or -1.
RadialEval radial_h1(const QuantumNumbers& q, int branch, double z);

// h3 from h1 via the companion relation
//   Z^2 h3 = ((a+ib)/(a-ib)) [ -2 i sigma (Z d/dZ + 1 - i sigma) - Z^2 ] h1.
RadialEval companion_h3(const QuantumNumbers& q, int branch, double z);

// Inverse map applied to an (h3, dh3/dZ) pair:
//   Z^2 h1 = ((a-ib)/(a+ib)) [ +2 i sigma (Z d/dZ + 1 + i sigma) - Z^2 ] h3.
cplx companion_inverse_h1(const QuantumNumbers& q, cplx Z, cplx h3, cplx dh3_dZ);

enum class Triple { Phi, E, H };

// sigma = 0 relations on one triple:
//   (a+ib) T1 = -(a-ib) T3
//   T2 = (i e^{-z} / (gamma (a-ib))) (d/dz - 1) T1
struct SigmaZeroResiduals {
  std::vector<double> proportionality;
  std::vector<double> second_component;
  double max_abs = 0.0;
  double max_rel = 0.0;
};
SigmaZeroResiduals sigma_zero_relations(const QuantumNumbers& q, const FieldComponents& f,
                                        Triple which);

struct AmplitudeRelations {
  cplx sigma;
  cplx e_over_phi;  // -i eps / M
  cplx h_over_phi;  // sigma / M
  bool phi0_vanishes = true;
};

// Checks sigma^2 = eps^2 - M^2 (complex arithmetic) and returns the
// amplitude ratios.  eps = M routes to the sigma = 0 branch instead.
AmplitudeRelations sigma_nonzero_constraints(const QuantumNumbers& q);

// Order of the Bessel solution of the Phi0 equation: sqrt(1 - (eps^2 - M^2)).
cplx phi0_bessel_order(const QuantumNumbers& q);

// Full 10-component sigma = 0 massive mode: Phi0 = e^z J_{branch*lambda}(Z)
// normalized to Phi0(0) = 1, Phi_j from the amplitude relations, E_j = -i(M/eps) Phi_j,
// H_j = 0.  Analytic derivatives throughout.
FieldComponents phi0_mode(const QuantumNumbers& q, int bessel_branch,
                          const std::vector<double>& z_grid);

}  // namespace lobdk
