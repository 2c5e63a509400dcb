#pragma once

// 10-dimensional Duffin-Kemmer matrices in the cyclic basis
// (third spin projection diagonal), the spin blocks J^{ab} and S_i,
// and the defining trilinear algebra check.

#include <array>
#include <vector>

#include "lobdk/types.hpp"

namespace lobdk {

struct CyclicGenerators {
  std::array<RowVec3, 3> e;  // e_1 = (-i,0,i)/sqrt2, e_2 = (1,0,1)/sqrt2, e_3 = (0,i,0)
  std::array<Mat3, 3> tau;   // spin-1 matrices, tau_3 = diag(1,0,-1)
};

struct DKMatrixSet {
  std::array<Mat10, 4> beta;    // beta^0 .. beta^3
  std::array<Mat10, 3> S;       // S_1, S_2, S_3 = blockdiag(0, tau_i, tau_i, tau_i)
  Mat10 J12, J13, J23;          // commutators of the betas
};

struct SpinBlocks {
  Mat10 J12, J13, J23;
  Mat10 curvature;  // -beta^1 J^31 + beta^2 J^23
};

CyclicGenerators build_cyclic_generators();

// Assembles the four betas in component order (Phi0 | Phi_j | E_j | H_j).
// With validate=true the trilinear algebra is checked on construction and a
// failure beyond 1e-12 throws, listing the offending triples.
DKMatrixSet build_beta_set(const CyclicGenerators& gen, bool validate = true);

SpinBlocks spin_blocks(const DKMatrixSet& set);

// max entrywise |b^a b^b b^c + b^c b^b b^a - eta^{ab} b^c - eta^{cb} b^a|
// over all 64 triples, eta = diag(1,-1,-1,-1).
double verify_dkp_trilinear(const DKMatrixSet& set);

// Same scan, reporting each triple whose deviation exceeds tol.
std::vector<std::array<int, 3>> dkp_trilinear_violations(const DKMatrixSet& set, double tol);

// Shared validated instance (built once).
const DKMatrixSet& dk_canonical();

}  // namespace lobdk
