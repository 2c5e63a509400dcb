#include <doctest.h>

#include <cmath>

#include "lobdk/errors.hpp"
#include "lobdk/special_functions.hpp"

using namespace lobdk;

namespace {
double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("gamma at checkpoints") {
  // cplx arguments throughout: a bare double would pick up libm's gamma()
  CHECK(rel(gamma(cplx(1.0, 0.0)), 1.0) < 1e-14);
  CHECK(rel(gamma(cplx(5.0, 0.0)), 24.0) < 1e-14);
  CHECK(rel(gamma(cplx(0.5, 0.0)), 1.7724538509055160273) < 1e-13);
  // frozen reference values
  CHECK(rel(gamma(cplx(2.5, -1.5)), cplx(0.30993622584074135, -0.73408427362148134)) < 1e-12);
  CHECK(rel(gamma(cplx(-3.2, 0.7)), cplx(-0.026783797265570482, 0.092468197955358293)) < 1e-12);
  CHECK_THROWS_AS(gamma(cplx(0.0, 0.0)), PoleError);
  CHECK_THROWS_AS(gamma(cplx(-4.0, 0.0)), PoleError);
}

TEST_CASE("gamma functional identities") {
  // recurrence and reflection across a spread of points with |w| <= 20
  for (cplx w : {cplx(0.3, 0.0), cplx(3.0, 4.0), cplx(-2.3, 1.1), cplx(10.0, -9.0), cplx(0.5, 15.0)}) {
    CHECK(rel(gamma(w + 1.0), w * gamma(w)) < 1e-12);
  }
}

TEST_CASE("bessel series at checkpoints") {
  CHECK(bessel_j(0.0, 0.0).value == cplx(1.0, 0.0));
  CHECK(bessel_j(1.0, 0.0).value == cplx(0.0, 0.0));
  CHECK(bessel_j(1.0, 0.0).derivative == cplx(0.5, 0.0));
  CHECK(rel(bessel_j(0.0, 1.0).value, 0.76519768655796655145) < 1e-13);
  // frozen: J_1(2i) = i I_1(2)
  CHECK(rel(bessel_j(1.0, cplx(0, 2)).value, cplx(0.0, 1.5906368546373290634)) < 1e-13);
  // frozen: complex order on the imaginary axis
  CHECK(rel(bessel_j(cplx(1.0, -0.8), cplx(0, 3)).value,
            cplx(-5.0114188525919076, 14.725019783480422)) < 1e-12);
  CHECK_THROWS_AS(bessel_j(0.0, cplx(31.0, 0.0)), NumericRangeError);
}

TEST_CASE("leading behavior near zero: J_1 ~ Z/2") {
  const cplx Z(0.0, 1e-6);
  CHECK(rel(bessel_j(1.0, Z).value, Z / 2.0) < 1e-12);
}

TEST_CASE("negative integer order parity") {
  const cplx z(0.4, 1.3);
  CHECK(rel(bessel_j(-2.0, z).value, bessel_j(2.0, z).value) < 1e-14);
  CHECK(rel(bessel_j(-3.0, z).value, -bessel_j(3.0, z).value) < 1e-14);
}

TEST_CASE("series vs oracle") {
  CHECK(rel(bessel_oracle(0.0, 1.0).value, 0.76519768655796655145) < 1e-10);
  for (cplx nu : {cplx(0.0, 0.0), cplx(1.0, -1.0), cplx(-2.5, 0.0), cplx(1.0, -4.0)}) {
    for (cplx arg : {cplx(0, 2), cplx(0, 9), cplx(3, 1)}) {
      const BesselEval s = bessel_j(nu, arg);
      const BesselOracleResult o = bessel_oracle(nu, arg);
      CHECK(rel(s.value, o.value) < 1e-10);
      CHECK(rel(s.derivative, o.derivative) < 1e-9);
    }
  }
}

TEST_CASE("oracle start-radius independence") {
  // seeding closer to the origin must not change the transported value
  const BesselOracleResult o1 = bessel_oracle(cplx(1, -1), cplx(0, 2));
  const BesselOracleResult o2 = bessel_oracle(cplx(1, -1), cplx(0, 2), 1e-4);
  CHECK(rel(o1.value, o2.value) < 1e-10);
}

TEST_CASE("wronskian identity") {
  const cplx nu(1.0, -1.0);
  const cplx arg(0.0, 2.0);
  const BesselEval p = bessel_j(nu, arg);
  const BesselEval m = bessel_j(-nu, arg);
  const cplx w = p.value * m.derivative - m.value * p.derivative;
  const cplx expected = -2.0 * std::sin(nu * 3.14159265358979323846) / (3.14159265358979323846 * arg);
  CHECK(std::abs(w - expected) / std::abs(expected) < 1e-9);
}

TEST_CASE("three-term recurrence") {
  for (cplx nu : {cplx(0.7, 0.0), cplx(1.0, -2.0), cplx(-1.3, 0.4)}) {
    for (cplx arg : {cplx(0, 1), cplx(0, 6), cplx(2, 2)}) {
      const cplx jm = bessel_j(nu - 1.0, arg).value;
      const cplx jp = bessel_j(nu + 1.0, arg).value;
      const cplx jc = bessel_j(nu, arg).value;
      CHECK(std::abs(jm + jp - 2.0 * nu / arg * jc) /
                std::max({std::abs(jm), std::abs(jp), 1e-300}) < 1e-10);
    }
  }
}

TEST_CASE("oracle error paths") {
  CHECK_THROWS_AS(bessel_oracle(0.0, 0.0), InvalidInputError);
  CHECK_THROWS_AS(bessel_oracle(0.0, cplx(0, 1), 0.0), InvalidInputError);
}

TEST_CASE("truncation estimate is reported") {
  const BesselEval ev = bessel_j(cplx(1, -1), cplx(0, 10));
  CHECK(ev.truncation_estimate < 1e-12);
  CHECK(ev.terms_used > 5);
}
