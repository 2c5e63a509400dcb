#include "lobdk/dk_algebra.hpp"

#include <sstream>

#include "lobdk/errors.hpp"

namespace lobdk {

CyclicGenerators build_cyclic_generators() {
  const double g = kInvSqrt2;
  CyclicGenerators gen;
  gen.e[0] << -kI * g, 0.0, kI * g;
  gen.e[1] << g, 0.0, g;
  gen.e[2] << 0.0, kI, 0.0;

  gen.tau[0] << 0, g, 0,
                g, 0, g,
                0, g, 0;
  gen.tau[1] << 0.0, -kI * g, 0.0,
                kI * g, 0.0, -kI * g,
                0.0, kI * g, 0.0;
  gen.tau[2] << 1, 0, 0,
                0, 0, 0,
                0, 0, -1;
  return gen;
}

static Mat10 assemble_beta_i(const RowVec3& e, const Mat3& tau) {
  Mat10 b = Mat10::Zero();
  b.block<1, 3>(0, 4) = e;                   // (Phi0, E_j)
  b.block<3, 3>(1, 7) = tau;                 // (Phi_j, H_j)
  b.block<3, 1>(4, 0) = -e.adjoint();        // (E_j, Phi0) = -e^+
  b.block<3, 3>(7, 1) = -tau;                // (H_j, Phi_j)
  return b;
}

DKMatrixSet build_beta_set(const CyclicGenerators& gen, bool validate) {
  DKMatrixSet set;
  set.beta[0] = Mat10::Zero();
  set.beta[0].block<3, 3>(1, 4) = kI * Mat3::Identity();
  set.beta[0].block<3, 3>(4, 1) = -kI * Mat3::Identity();
  for (int i = 0; i < 3; ++i) {
    set.beta[i + 1] = assemble_beta_i(gen.e[i], gen.tau[i]);
    set.S[i] = Mat10::Zero();
    set.S[i].block<3, 3>(1, 1) = gen.tau[i];
    set.S[i].block<3, 3>(4, 4) = gen.tau[i];
    set.S[i].block<3, 3>(7, 7) = gen.tau[i];
  }
  auto comm = [](const Mat10& x, const Mat10& y) -> Mat10 { return x * y - y * x; };
  set.J12 = comm(set.beta[1], set.beta[2]);
  set.J13 = comm(set.beta[1], set.beta[3]);
  set.J23 = comm(set.beta[2], set.beta[3]);

  if (validate) {
    const auto bad = dkp_trilinear_violations(set, 1e-12);
    if (!bad.empty()) {
      std::ostringstream os;
      os << "build_beta_set: trilinear algebra violated for triples";
      for (const auto& t : bad) os << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
      throw InvalidInputError(os.str());
    }
  }
  return set;
}

SpinBlocks spin_blocks(const DKMatrixSet& set) {
  SpinBlocks sb;
  sb.J12 = set.J12;
  sb.J13 = set.J13;
  sb.J23 = set.J23;
  const Mat10 J31 = -set.J13;
  sb.curvature = -set.beta[1] * J31 + set.beta[2] * set.J23;
  return sb;
}

static double triple_deviation(const DKMatrixSet& set, int a, int b, int c) {
  static const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  const Mat10& A = set.beta[a];
  const Mat10& B = set.beta[b];
  const Mat10& C = set.beta[c];
  Mat10 lhs = A * B * C + C * B * A;
  if (a == b) lhs -= eta[a] * C;
  if (c == b) lhs -= eta[c] * A;
  return lhs.cwiseAbs().maxCoeff();
}

double verify_dkp_trilinear(const DKMatrixSet& set) {
  double dev = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) dev = std::max(dev, triple_deviation(set, a, b, c));
  return dev;
}

std::vector<std::array<int, 3>> dkp_trilinear_violations(const DKMatrixSet& set, double tol) {
  std::vector<std::array<int, 3>> bad;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (triple_deviation(set, a, b, c) > tol) bad.push_back({a, b, c});
  return bad;
}

const DKMatrixSet& dk_canonical() {
  static const DKMatrixSet set = build_beta_set(build_cyclic_generators());
  return set;
}

}  // namespace lobdk
