#include "lobdk/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "lobdk/errors.hpp"

namespace lobdk {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;

// Lanczos, g = 607/128, 15 coefficients (Godfrey).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

bool is_nonpositive_integer(cplx w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

bool is_integer(cplx w) {
  return w.imag() == 0.0 && w.real() == std::floor(w.real());
}

cplx gamma_core(cplx z) {
  // valid for Re z >= 0.5
  cplx s = kLanczosC[0];
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (z - 1.0 + static_cast<double>(k));
  const cplx t = z + (kLanczosG - 0.5);
  return kSqrt2Pi * std::pow(t, z - 0.5) * std::exp(-t) * s;
}

}  // namespace

cplx gamma(cplx w) {
  if (is_nonpositive_integer(w))
    throw PoleError("gamma: pole at nonpositive integer");
  if (w.real() < 0.5) {
    // reflection: gamma(w) = pi / (sin(pi w) gamma(1 - w))
    return kPi / (std::sin(kPi * w) * gamma_core(1.0 - w));
  }
  return gamma_core(w);
}

namespace {

constexpr double kArgCap = 30.0;
constexpr int kMaxTerms = 200;

// Series sum without the (arg/2)^order prefactor and without parity handling.
struct RawSeries {
  cplx sum;
  int terms;
  double truncation;  // relative
};

RawSeries bessel_series_sum(cplx nu, cplx half_arg_sq) {
  cplx term = 1.0 / gamma(nu + 1.0);
  cplx sum = term;
  int k = 0;
  double prev = std::abs(term);
  for (; k < kMaxTerms; ++k) {
    term *= -half_arg_sq / (static_cast<double>(k + 1) * (nu + static_cast<double>(k + 1)));
    sum += term;
    const double cur = std::abs(term);
    if (cur < 1e-16 * std::abs(sum) && prev < 1e-16 * std::abs(sum)) break;
    prev = cur;
  }
  RawSeries rs;
  rs.sum = sum;
  rs.terms = k + 1;
  rs.truncation = std::abs(sum) > 0.0 ? std::abs(term) / std::abs(sum)
                                      : std::abs(term);
  return rs;
}

// Value-only evaluation used for the derivative's neighbor orders.
cplx bessel_value(cplx nu, cplx arg, int& terms, double& trunc) {
  if (arg == 0.0) {
    if (is_integer(nu)) {
      const long n = std::lround(nu.real());
      return n == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    }
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw NumericRangeError("bessel_j: divergent at arg = 0 for Re(order) < 0");
  }
  double parity = 1.0;
  if (is_integer(nu) && nu.real() < 0.0) {
    // J_{-n} = (-1)^n J_n
    const long n = std::lround(-nu.real());
    parity = (n % 2 == 0) ? 1.0 : -1.0;
    nu = -nu;
  }
  const cplx half = arg / 2.0;
  const RawSeries rs = bessel_series_sum(nu, half * half);
  terms = std::max(terms, rs.terms);
  trunc = std::max(trunc, rs.truncation);
  const cplx prefactor = std::exp(nu * std::log(half));  // principal branch
  return parity * prefactor * rs.sum;
}

}  // namespace

BesselEval bessel_j(cplx order, cplx arg) {
  if (std::abs(arg) > kArgCap)
    throw NumericRangeError("bessel_j: |arg| beyond series regime (cap 30)");

  BesselEval ev;
  ev.order = order;
  ev.argument = arg;
  ev.terms_used = 0;
  ev.truncation_estimate = 0.0;
  ev.value = bessel_value(order, arg, ev.terms_used, ev.truncation_estimate);

  if (arg == 0.0) {
    // J'_nu(0) from the series leading terms.
    if (is_integer(order)) {
      const long n = std::lround(order.real());
      const long na = std::labs(n);
      double d = (na == 1) ? 0.5 : 0.0;
      if (n == -1) d = -0.5;
      ev.derivative = d;
    } else if (order.real() > 1.0) {
      ev.derivative = 0.0;
    } else {
      throw NumericRangeError("bessel_j: derivative singular at arg = 0");
    }
    return ev;
  }

  const cplx jm = bessel_value(order - 1.0, arg, ev.terms_used, ev.truncation_estimate);
  const cplx jp = bessel_value(order + 1.0, arg, ev.terms_used, ev.truncation_estimate);
  ev.derivative = (jm - jp) / 2.0;

  if (ev.truncation_estimate > 1e-12)
    throw NumericRangeError("bessel_j: truncation estimate above 1e-12");
  return ev;
}

namespace {

// Dormand-Prince 5(4) tableau.
struct DP45 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

using State = Eigen::Vector2cd;  // (w, dw/dr)

}  // namespace

BesselOracleResult bessel_oracle(cplx order, cplx arg, double start_radius) {
  if (arg == 0.0) throw InvalidInputError("bessel_oracle: arg must be nonzero");
  if (!(start_radius > 0.0))
    throw InvalidInputError("bessel_oracle: start radius must be positive");

  const double r_end = std::abs(arg);
  const cplx u = arg / r_end;  // unit ray direction
  const cplx nu = order;
  const cplx nu2 = nu * nu;
  const cplx u2 = u * u;

  auto rhs = [&](double r, const State& y) -> State {
    State d;
    d(0) = y(1);
    d(1) = -y(1) / r - (u2 - nu2 / (r * r)) * y(0);
    return d;
  };

  // Converged ascending series at the start point; dw/dt summed term by term
  // via d/dt (t/2)^{nu+2k} = (nu+2k)/t * (t/2)^{nu+2k}.
  auto seed = [&](double r) -> State {
    const cplx t = r * u;
    const cplx half = t / 2.0;
    cplx term = std::exp(nu * std::log(half)) / gamma(nu + 1.0);
    cplx w = term;
    cplx dw = term * nu / t;
    for (int k = 0; k < 80; ++k) {
      term *= -half * half / (static_cast<double>(k + 1) * (nu + static_cast<double>(k + 1)));
      w += term;
      dw += term * (nu + 2.0 * static_cast<double>(k + 1)) / t;
      if (std::abs(term) < 1e-17 * std::abs(w)) break;
    }
    State y;
    y(0) = w;
    y(1) = u * dw;
    return y;
  };

  BesselOracleResult res;
  const double r_start = std::min(start_radius, r_end / 2.0);
  double r = r_start;
  State y = seed(r);
  double h = r_start / 10.0;
  const double rtol = 1e-13;
  const long max_steps = 2000000;
  long steps = 0;

  while (r < r_end) {
    if (++steps > max_steps)
      throw OracleFailureError("bessel_oracle: step count exploded");
    if (r + h > r_end) h = r_end - r;

    const State k1 = rhs(r, y);
    const State k2 = rhs(r + DP45::c2 * h, y + h * (DP45::a21 * k1));
    const State k3 = rhs(r + DP45::c3 * h, y + h * (DP45::a31 * k1 + DP45::a32 * k2));
    const State k4 = rhs(r + DP45::c4 * h, y + h * (DP45::a41 * k1 + DP45::a42 * k2 + DP45::a43 * k3));
    const State k5 =
        rhs(r + DP45::c5 * h, y + h * (DP45::a51 * k1 + DP45::a52 * k2 + DP45::a53 * k3 + DP45::a54 * k4));
    const State k6 = rhs(
        r + h, y + h * (DP45::a61 * k1 + DP45::a62 * k2 + DP45::a63 * k3 + DP45::a64 * k4 + DP45::a65 * k5));
    const State ynew =
        y + h * (DP45::b1 * k1 + DP45::b3 * k3 + DP45::b4 * k4 + DP45::b5 * k5 + DP45::b6 * k6);
    const State k7 = rhs(r + h, ynew);
    const State errv =
        h * (DP45::e1 * k1 + DP45::e3 * k3 + DP45::e4 * k4 + DP45::e5 * k5 + DP45::e6 * k6 + DP45::e7 * k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale =
          1e-290 + rtol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      err = std::max(err, std::abs(errv(i)) / scale);
    }

    if (err <= 1.0) {
      r += h;
      y = ynew;
    }
    const double factor = std::clamp(0.9 * std::pow(err > 0.0 ? err : 1e-10, -0.2), 0.2, 5.0);
    h *= factor;
    if (!(h > 0.0) || !std::isfinite(h))
      throw OracleFailureError("bessel_oracle: step size collapsed");
  }

  res.value = y(0);
  res.derivative = y(1) / u;
  res.steps = steps;
  return res;
}

}  // namespace lobdk
