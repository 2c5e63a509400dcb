#include "lobdk/helicity.hpp"

#include <cmath>

#include "lobdk/errors.hpp"

namespace lobdk {

HelicityOperator build_helicity(const QuantumNumbers& q, const DKMatrixSet& set) {
  HelicityOperator op;
  op.D = -kI * set.S[2];
  op.C_const = kI * set.S[2];
  op.C_lin = q.a * set.S[0] + q.b * set.S[1];
  return op;
}

namespace {

// The ten scalar eigen-equations, one grid point.  Each of the Phi, E, H
// triples obeys the same (d/dz - 1)-shifted pattern; the Phi0 row is zero.
inline void helicity_point(cplx sigma, const QuantumNumbers& q, const Vec10& f, const Vec10& df,
                           double z, cplx (&r)[10]) {
  const double g = kInvSqrt2;
  const double ez = std::exp(z);
  const cplx apb = cplx(q.a, q.b);
  const cplx amb = cplx(q.a, -q.b);

  r[0] = -sigma * f[kPhi0];
  for (int blk = 0; blk < 3; ++blk) {
    const int o = 1 + 3 * blk;  // offset of Phi/E/H triple
    r[o + 0] = -kI * (df[o + 0] - f[o + 0]) - sigma * f[o + 0] + g * amb * ez * f[o + 1];
    r[o + 1] = g * apb * ez * f[o + 0] + g * amb * ez * f[o + 2] - sigma * f[o + 1];
    r[o + 2] = kI * (df[o + 2] - f[o + 2]) - sigma * f[o + 2] + g * apb * ez * f[o + 1];
  }
}

}  // namespace

HelicityResiduals helicity_residuals(cplx sigma, const QuantumNumbers& q,
                                     const FieldComponents& f, Exec exec) {
  f.validate();
  const std::size_t n = f.size();
  HelicityResiduals hr;
  for (auto& v : hr.abs_residual) v.assign(n, 0.0);

  auto point = [&](std::size_t i) {
    cplx r[10];
    helicity_point(sigma, q, f.at(i), f.deriv_at(i), f.z[i], r);
    for (int e = 0; e < 10; ++e) hr.abs_residual[e][i] = std::abs(r[e]);
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) point(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) point(i);
  }

  for (const auto& eq : hr.abs_residual)
    for (double v : eq) hr.max_abs = std::max(hr.max_abs, v);
  hr.max_rel = hr.max_abs / std::max(f.max_abs(), 1e-300);
  return hr;
}

Vec10 TestField::value(double z) const {
  return dir * (std::pow(z, power) * std::exp(rate * z));
}

Vec10 TestField::d1(double z) const {
  const double e = std::exp(rate * z);
  double p = rate * std::pow(z, power);
  if (power > 0) p += power * std::pow(z, power - 1);
  return dir * (p * e);
}

Vec10 TestField::d2(double z) const {
  const double e = std::exp(rate * z);
  double p = rate * rate * std::pow(z, power);
  if (power > 0) p += 2.0 * rate * power * std::pow(z, power - 1);
  if (power > 1) p += power * (power - 1) * std::pow(z, power - 2);
  return dir * (p * e);
}

std::vector<TestField> commutator_test_basis() {
  std::vector<TestField> basis;
  basis.reserve(90);
  for (int c = 0; c < 10; ++c)
    for (double k : {0.0, 1.0, -1.0})
      for (int p : {0, 1, 2}) {
        TestField tf;
        tf.dir = Vec10::Zero();
        tf.dir(c) = 1.0;
        tf.power = p;
        tf.rate = k;
        basis.push_back(tf);
      }
  return basis;
}

double commutator_residual(const QuantumNumbers& q, const std::vector<TestField>& fields,
                           const std::vector<double>& z_samples) {
  const DKMatrixSet& set = dk_canonical();
  const FirstOrderSystem W = assemble_operator(q, set);
  const HelicityOperator S = build_helicity(q, set);

  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (long zi = 0; zi < static_cast<long>(z_samples.size()); ++zi) {
    const double z = z_samples[zi];
    const Mat10 Bz = W.B(z), dBz = W.dB(z);
    const Mat10 Cz = S.C(z), dCz = S.dC(z);
    for (const TestField& tf : fields) {
      const Vec10 f = tf.value(z), f1 = tf.d1(z), f2 = tf.d2(z);
      // W f and its z-derivative
      const Vec10 wf = W.A * f1 + Bz * f;
      const Vec10 wf1 = W.A * f2 + dBz * f + Bz * f1;
      // Sigma f and its z-derivative
      const Vec10 sf = Cz * f + S.D * f1;
      const Vec10 sf1 = dCz * f + Cz * f1 + S.D * f2;
      const Vec10 comm = (Cz * wf + S.D * wf1) - (W.A * sf1 + Bz * sf);
      worst = std::max(worst, comm.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace lobdk
