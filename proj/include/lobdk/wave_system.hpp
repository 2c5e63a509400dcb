#pragma once

// The separated first-order system [A d/dz + B(z)] Psi = 0 with
//   A = i beta^3,
//   B(z) = eps beta^0 - a e^z beta^1 - b e^z beta^2 + i(-beta^1 J^31 + beta^2 J^23) - M I,
// its explicit 10-equation residual form, and the Lorentz-condition residual.

#include <array>
#include <vector>

#include "lobdk/dk_algebra.hpp"
#include "lobdk/types.hpp"

namespace lobdk {

struct QuantumNumbers {
  double epsilon = 0.0;  // energy
  double a = 0.0;        // quasi-momentum along x
  double b = 0.0;        // quasi-momentum along y
  double mass = 0.0;
  cplx sigma{0.0, 0.0};  // generalized helicity eigenvalue

  double s() const { return std::hypot(a, b); }  // transverse momentum
};

// z-profiles of the 10 components with their derivatives.
struct FieldComponents {
  std::vector<double> z;  // strictly increasing
  std::array<std::vector<cplx>, 10> value;
  std::array<std::vector<cplx>, 10> deriv;

  std::size_t size() const { return z.size(); }
  void resize(std::size_t n);
  void validate() const;  // throws InvalidInputError on shape violations
  double max_abs() const;

  Vec10 at(std::size_t i) const;
  Vec10 deriv_at(std::size_t i) const;
};

// B(z) = B_const + e^z B_lin; the z-dependence sits entirely in the a,b blocks.
struct FirstOrderSystem {
  Mat10 A;
  Mat10 B_const;
  Mat10 B_lin;
  Mat10 B(double z) const { return B_const + std::exp(z) * B_lin; }
  Mat10 dB(double z) const { return std::exp(z) * B_lin; }
};

FirstOrderSystem assemble_operator(const QuantumNumbers& q, const DKMatrixSet& set);

enum class Exec { serial, parallel };

struct ResidualReport {
  std::array<std::vector<double>, 10> abs_residual;  // per equation, per grid point
  double max_abs = 0.0;
  double scale = 0.0;    // max component magnitude over the grid
  double max_rel = 0.0;  // max_abs / max(scale, tiny)
  double form_mismatch = 0.0;  // explicit-form vs matrix-form disagreement
};

// Residuals of the ten explicit equations; also evaluates the matrix form
// [A d/dz + B] f and checks the two regroupings agree to 1e-12 relative
// (throws logic_error otherwise).
ResidualReport explicit_residuals(const QuantumNumbers& q, const FieldComponents& f,
                                  Exec exec = Exec::parallel);

// Residual of  -i eps Phi0 + g(ia-b) e^z Phi1 - g(ia+b) e^z Phi3 - (d/dz - 2) Phi2.
struct LorentzResidual {
  std::vector<double> abs_residual;
  double max_abs = 0.0;
  double max_rel = 0.0;
};
LorentzResidual lorentz_residual(const QuantumNumbers& q, const FieldComponents& f,
                                 Exec exec = Exec::parallel);

// Relabeling between cyclic and cartesian vector components:
//   Phi2 = Phi^cart_3,  Phi3 - Phi1 = sqrt2 Phi^cart_1,  Phi3 + Phi1 = sqrt2 i Phi^cart_2.
Vec3 cyclic_to_cartesian(const Vec3& cyc);
Vec3 cartesian_to_cyclic(const Vec3& cart);

// 4th-order finite-difference fill of all derivative arrays (uniform grids only).
// Test-field fallback; closed-form modes carry analytic derivatives.
void fill_derivatives_fd(FieldComponents& f);

}  // namespace lobdk
