#include "lobdk/wave_system.hpp"

#include <cmath>
#include <stdexcept>

#include "lobdk/errors.hpp"

namespace lobdk {

void FieldComponents::resize(std::size_t n) {
  z.resize(n);
  for (auto& v : value) v.assign(n, cplx{0.0, 0.0});
  for (auto& d : deriv) d.assign(n, cplx{0.0, 0.0});
}

void FieldComponents::validate() const {
  const std::size_t n = z.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(z[i] > z[i - 1]))
      throw InvalidInputError("FieldComponents: grid must be strictly increasing");
  for (const auto& v : value)
    if (v.size() != n) throw InvalidInputError("FieldComponents: mismatched array length");
  for (const auto& d : deriv)
    if (d.size() != n) throw InvalidInputError("FieldComponents: mismatched derivative length");
}

double FieldComponents::max_abs() const {
  double m = 0.0;
  for (const auto& v : value)
    for (const cplx& c : v) m = std::max(m, std::abs(c));
  return m;
}

Vec10 FieldComponents::at(std::size_t i) const {
  Vec10 v;
  for (int c = 0; c < 10; ++c) v(c) = value[c][i];
  return v;
}

Vec10 FieldComponents::deriv_at(std::size_t i) const {
  Vec10 v;
  for (int c = 0; c < 10; ++c) v(c) = deriv[c][i];
  return v;
}

FirstOrderSystem assemble_operator(const QuantumNumbers& q, const DKMatrixSet& set) {
  FirstOrderSystem sys;
  const SpinBlocks sb = spin_blocks(set);
  sys.A = kI * set.beta[3];
  sys.B_const = q.epsilon * set.beta[0] + kI * sb.curvature - q.mass * Mat10::Identity();
  sys.B_lin = -q.a * set.beta[1] - q.b * set.beta[2];
  return sys;
}

namespace {

// The ten equations (explicit regrouped form), one grid point.
inline void explicit_point(const QuantumNumbers& q, const Vec10& f, const Vec10& df, double z,
                           cplx (&r)[10]) {
  const double g = kInvSqrt2;
  const double ez = std::exp(z);
  const double eps = q.epsilon, a = q.a, b = q.b, M = q.mass;
  const cplx apb = cplx(a, b);   // a + ib
  const cplx amb = cplx(a, -b);  // a - ib

  r[0] = g * cplx(-b, a) * ez * f[kE1] - g * cplx(b, a) * ez * f[kE3] -
         (df[kE2] - 2.0 * f[kE2]) - M * f[kPhi0];

  r[1] = kI * eps * f[kE1] - g * amb * ez * f[kH2] + kI * (df[kH1] - f[kH1]) - M * f[kPhi1];
  r[2] = kI * eps * f[kE2] - g * apb * ez * f[kH1] - g * amb * ez * f[kH3] - M * f[kPhi2];
  r[3] = kI * eps * f[kE3] - g * apb * ez * f[kH2] - kI * (df[kH3] - f[kH3]) - M * f[kPhi3];

  r[4] = -kI * eps * f[kPhi1] + g * cplx(b, a) * ez * f[kPhi0] - M * f[kE1];
  r[5] = -kI * eps * f[kPhi2] - df[kPhi0] - M * f[kE2];
  r[6] = -kI * eps * f[kPhi3] + g * cplx(b, -a) * ez * f[kPhi0] - M * f[kE3];

  r[7] = g * amb * ez * f[kPhi2] - kI * (df[kPhi1] - f[kPhi1]) - M * f[kH1];
  r[8] = g * apb * ez * f[kPhi1] + g * amb * ez * f[kPhi3] - M * f[kH2];
  r[9] = g * apb * ez * f[kPhi2] + kI * (df[kPhi3] - f[kPhi3]) - M * f[kH3];
}

}  // namespace

ResidualReport explicit_residuals(const QuantumNumbers& q, const FieldComponents& f, Exec exec) {
  f.validate();
  const std::size_t n = f.size();
  ResidualReport rep;
  for (auto& v : rep.abs_residual) v.assign(n, 0.0);
  std::vector<double> mismatch(n, 0.0);

  const FirstOrderSystem sys = assemble_operator(q, dk_canonical());

  auto point = [&](std::size_t i) {
    const Vec10 fv = f.at(i);
    const Vec10 dv = f.deriv_at(i);
    cplx r[10];
    explicit_point(q, fv, dv, f.z[i], r);
    const Vec10 rm = sys.A * dv + sys.B(f.z[i]) * fv;
    double mm = 0.0;
    for (int e = 0; e < 10; ++e) {
      rep.abs_residual[e][i] = std::abs(r[e]);
      mm = std::max(mm, std::abs(r[e] - rm(e)));
    }
    mismatch[i] = mm;
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) point(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) point(i);
  }

  rep.scale = f.max_abs();
  for (const auto& eq : rep.abs_residual)
    for (double v : eq) rep.max_abs = std::max(rep.max_abs, v);
  for (double v : mismatch) rep.form_mismatch = std::max(rep.form_mismatch, v);
  const double denom = std::max(rep.scale, 1e-300);
  rep.max_rel = rep.max_abs / denom;

  if (rep.form_mismatch / denom > 1e-12)
    throw std::logic_error("explicit_residuals: explicit and matrix forms disagree");
  return rep;
}

LorentzResidual lorentz_residual(const QuantumNumbers& q, const FieldComponents& f, Exec exec) {
  f.validate();
  const std::size_t n = f.size();
  LorentzResidual lr;
  lr.abs_residual.assign(n, 0.0);
  const double g = kInvSqrt2;

  auto point = [&](std::size_t i) {
    const double ez = std::exp(f.z[i]);
    const cplx r = -kI * q.epsilon * f.value[kPhi0][i] + g * cplx(-q.b, q.a) * ez * f.value[kPhi1][i] -
                   g * cplx(q.b, q.a) * ez * f.value[kPhi3][i] -
                   (f.deriv[kPhi2][i] - 2.0 * f.value[kPhi2][i]);
    lr.abs_residual[i] = std::abs(r);
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) point(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) point(i);
  }

  for (double v : lr.abs_residual) lr.max_abs = std::max(lr.max_abs, v);
  lr.max_rel = lr.max_abs / std::max(f.max_abs(), 1e-300);
  return lr;
}

Vec3 cyclic_to_cartesian(const Vec3& cyc) {
  const double s2 = 1.4142135623730950488;
  Vec3 cart;
  cart(0) = (cyc(2) - cyc(0)) / s2;
  cart(1) = (cyc(2) + cyc(0)) / (s2 * kI);
  cart(2) = cyc(1);
  return cart;
}

Vec3 cartesian_to_cyclic(const Vec3& cart) {
  const double s2 = 1.4142135623730950488;
  Vec3 cyc;
  cyc(0) = (s2 * kI * cart(1) - s2 * cart(0)) / 2.0;
  cyc(1) = cart(2);
  cyc(2) = (s2 * cart(0) + s2 * kI * cart(1)) / 2.0;
  return cyc;
}

void fill_derivatives_fd(FieldComponents& f) {
  const std::size_t n = f.size();
  if (n < 5) throw InvalidInputError("fill_derivatives_fd: need at least 5 points");
  const double h = f.z[1] - f.z[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs((f.z[i + 1] - f.z[i]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
      throw InvalidInputError("fill_derivatives_fd: grid must be uniform");

  for (int c = 0; c < 10; ++c) {
    const auto& v = f.value[c];
    auto& d = f.deriv[c];
    for (std::size_t i = 2; i + 2 < n; ++i)
      d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
    // 4th-order one-sided stencils at the edges
    auto onesided = [&](std::size_t i, int dir) {
      const double s = static_cast<double>(dir);
      return s *
             (-25.0 * v[i] + 48.0 * v[i + dir] - 36.0 * v[i + 2 * dir] + 16.0 * v[i + 3 * dir] -
              3.0 * v[i + 4 * dir]) /
             (12.0 * h);
    };
    d[0] = onesided(0, +1);
    d[1] = onesided(1, +1);
    d[n - 1] = onesided(n - 1, -1);
    d[n - 2] = onesided(n - 2, -1);
  }
}

}  // namespace lobdk
