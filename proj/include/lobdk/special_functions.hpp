#pragma once

// Complex gamma (Lanczos) and Bessel J of complex order and complex argument,
// evaluated by the ascending series, plus an independent adaptive-RK oracle
// that integrates the Bessel ODE along the ray 0 -> arg.

#include "lobdk/types.hpp"

namespace lobdk {

// Relative error < 1e-12 for |w| <= 20.  Throws PoleError at nonpositive integers.
cplx gamma(cplx w);

struct BesselEval {
  cplx order;
  cplx argument;
  cplx value;
  cplx derivative;  // dJ/d(arg), via J' = (J_{nu-1} - J_{nu+1})/2
  int terms_used = 0;
  double truncation_estimate = 0.0;  // relative bound on the dropped tail
};

// Ascending series, principal branch for (arg/2)^order.
// Requires |arg| <= 30; a truncation estimate above 1e-12 is an error,
// never a silent result.
BesselEval bessel_j(cplx order, cplx arg);

struct BesselOracleResult {
  cplx value;
  cplx derivative;  // dJ/d(arg)
  long steps = 0;
};

// Integrates w'' + w'/t + (1 - nu^2/t^2) w = 0 along the ray from
// start_radius * arg/|arg| to arg, seeded with the converged ascending series
// at the start point.  Adaptive Dormand-Prince, local tolerance 1e-13.
// The default start radius stays away from t = 0, where an outward
// integration of a singular (Re nu < 0) solution would amplify seed and
// roundoff error into the regular companion solution.
BesselOracleResult bessel_oracle(cplx order, cplx arg, double start_radius = 0.5);

}  // namespace lobdk
