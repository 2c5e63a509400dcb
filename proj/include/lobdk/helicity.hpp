#pragma once

// Generalized helicity operator
//   Sigma = a e^z S^1 + b e^z S^2 - i S^3 (d/dz - 1),
// using -S^1 J^31 + S^2 J^23 = -S^3.  The Phi0 row is identically zero,
// so sigma != 0 forces Phi0 = 0.  Eigen-residuals of the ten scalar
// equations and a numerical certificate that Sigma commutes with the
// wave operator on an analytic test-field basis.

#include <vector>

#include "lobdk/dk_algebra.hpp"
#include "lobdk/wave_system.hpp"

namespace lobdk {

struct HelicityOperator {
  Mat10 D;        // coefficient of d/dz, -i S^3
  Mat10 C_const;  // +i S^3
  Mat10 C_lin;    // a S^1 + b S^2
  Mat10 C(double z) const { return C_const + std::exp(z) * C_lin; }
  Mat10 dC(double z) const { return std::exp(z) * C_lin; }
};

HelicityOperator build_helicity(const QuantumNumbers& q, const DKMatrixSet& set);

struct HelicityResiduals {
  std::array<std::vector<double>, 10> abs_residual;
  double max_abs = 0.0;
  double max_rel = 0.0;
};

// Residual of [Sigma - sigma] f per scalar equation and grid point.
HelicityResiduals helicity_residuals(cplx sigma, const QuantumNumbers& q,
                                     const FieldComponents& f, Exec exec = Exec::parallel);

// Test field f(z) = dir * z^p * e^{k z} with analytic first and second derivatives.
struct TestField {
  Vec10 dir;
  int power = 0;  // p <= 2
  double rate = 0.0;

  Vec10 value(double z) const;
  Vec10 d1(double z) const;
  Vec10 d2(double z) const;
};

// Deterministic basis: 10 canonical directions x k in {0,+1,-1} x degree in {0,1,2}.
std::vector<TestField> commutator_test_basis();

// max over test fields and sample points of |(Sigma W - W Sigma) f|,
// second-derivative terms formed by the product rule.
double commutator_residual(const QuantumNumbers& q, const std::vector<TestField>& fields,
                           const std::vector<double>& z_samples);

}  // namespace lobdk
