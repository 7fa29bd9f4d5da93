#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include <nct/rotation.hpp>

using nct::Error;
using nct::errc;
using Rot = nct::RotationParameter<double>;

namespace {
constexpr double kGolden = 0.6180339887498949;  // frac(golden ratio)

void check_close(double x, double ref, double rel = 5e-16) {
  CHECK(std::abs(x - ref) <= rel * std::max(1.0, std::abs(ref)));
}
}  // namespace

TEST_CASE("exact rational construction normalizes and reduces") {
  const Rot r = Rot::from_fraction(5, 3);
  REQUIRE(r.is_exact());
  CHECK(r.exact()->first == 2);
  CHECK(r.exact()->second == 3);

  const Rot neg = Rot::from_fraction(-1, 3);
  CHECK(neg.exact()->first == 2);
  CHECK(neg.exact()->second == 3);

  const Rot red = Rot::from_fraction(2, 4);
  CHECK(red.exact()->first == 1);
  CHECK(red.exact()->second == 2);
  CHECK(red.value() == 0.5);

  const Rot zero = Rot::from_fraction(0, 7);
  CHECK(zero.exact()->first == 0);
  CHECK(zero.exact()->second == 1);
  CHECK(zero.value() == 0.0);

  CHECK(Rot::from_fraction(2, 4) == Rot::from_fraction(1, 2));
  CHECK_THROWS_AS(Rot::from_fraction(1, 0), Error);
}

TEST_CASE("floating construction validates the domain") {
  CHECK(Rot::from_value(0.25).value() == 0.25);
  CHECK_FALSE(Rot::from_value(0.25).is_exact());
  CHECK(Rot::from_value(-0.0).value() == 0.0);
  CHECK_THROWS_AS(Rot::from_value(1.0), Error);
  CHECK_THROWS_AS(Rot::from_value(-0.1), Error);
  CHECK_THROWS_AS(Rot::from_value(std::nan("")), Error);
  // exactness participates in identity
  CHECK_FALSE(Rot::from_value(0.5) == Rot::from_fraction(1, 2));
}

TEST_CASE("frac_multiple is exactly periodic for exact rationals") {
  const Rot r = Rot::from_fraction(2, 7);
  CHECK(r.frac_multiple(0) == 0.0);
  CHECK(r.frac_multiple(1) == 2.0 / 7.0);
  CHECK(r.frac_multiple(5) == 3.0 / 7.0);  // 10 mod 7 = 3
  for (std::int64_t k = -20; k <= 20; ++k) {
    CHECK(r.frac_multiple(k) == r.frac_multiple(k + 7));
    CHECK(r.frac_multiple(k) == r.frac_multiple(k % 7 + 7));
  }
}

TEST_CASE("frac_multiple reduces huge multiples of a floating parameter exactly") {
  const Rot g = Rot::from_value(kGolden);
  CHECK(g.frac_multiple(1) == kGolden);  // k = 1 is exact
  // References computed with exact rational arithmetic on the binary value
  // of the parameter.
  check_close(g.frac_multiple(2), 0.2360679774997898);
  check_close(g.frac_multiple(377), 0.9988137587103783);
  check_close(g.frac_multiple(-377), 0.0011862412896217478);
  check_close(g.frac_multiple(1000000), 0.9887498949025257);
  check_close(g.frac_multiple(987654321), 0.5136990887754198);
  check_close(g.frac_multiple(-987654321), 0.4863009112245802);
  // complements: frac(k x) + frac(-k x) = 1 for non-integer k x
  for (std::int64_t k : {2LL, 377LL, 987654321LL}) {
    CHECK(g.frac_multiple(k) + g.frac_multiple(-k) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("frac_multiple handles tiny dyadic parameters without overflow") {
  const Rot tiny = Rot::from_value(std::ldexp(1.0, -70));
  CHECK(tiny.frac_multiple(std::int64_t(1) << 62) == 0.00390625);  // 2^62 * 2^-70 = 2^-8
  CHECK(tiny.frac_multiple(1) == std::ldexp(1.0, -70));
  const Rot zero = Rot::from_fraction(0, 1);
  for (std::int64_t k : {-5LL, 0LL, 123456789LL}) CHECK(zero.frac_multiple(k) == 0.0);
}

TEST_CASE("unit_phase hits quarter turns exactly") {
  const Rot q = Rot::from_fraction(1, 4);
  CHECK(nct::unit_phase(1, q) == std::complex<double>(0, 1));
  CHECK(nct::unit_phase(2, q) == std::complex<double>(-1, 0));
  CHECK(nct::unit_phase(3, q) == std::complex<double>(0, -1));
  CHECK(nct::unit_phase(4, q) == std::complex<double>(1, 0));
  CHECK(nct::unit_phase(-1, q) == std::complex<double>(0, -1));

  const Rot zero = Rot::from_fraction(0, 1);
  CHECK(nct::unit_phase(123, zero) == std::complex<double>(1, 0));
}

TEST_CASE("unit_phase is unimodular and matches the direct formula at k = 1") {
  const Rot g = Rot::from_value(kGolden);
  for (std::int64_t k : {1LL, 2LL, 17LL, -31LL, 100003LL}) {
    CHECK(std::abs(std::abs(nct::unit_phase(k, g)) - 1.0) <= 2e-16);
  }
  const auto direct = std::polar(1.0, 2.0 * 3.14159265358979323846 * kGolden);
  CHECK(std::abs(nct::unit_phase(1, g) - direct) <= 1e-15);
}

TEST_CASE("parse_rotation accepts decimals and exact fractions") {
  const Rot a = nct::parse_rotation<double>("1/4");
  REQUIRE(a.is_exact());
  CHECK(a.exact()->first == 1);
  CHECK(a.exact()->second == 4);

  const Rot b = nct::parse_rotation<double>("3/6");
  CHECK(b.exact()->second == 2);

  const Rot c = nct::parse_rotation<double>("0.25");
  CHECK_FALSE(c.is_exact());
  CHECK(c.value() == 0.25);

  CHECK_THROWS_AS(nct::parse_rotation<double>("abc"), Error);
  CHECK_THROWS_AS(nct::parse_rotation<double>("1/0"), Error);
  CHECK_THROWS_AS(nct::parse_rotation<double>("-0.5"), Error);
  CHECK_THROWS_AS(nct::parse_rotation<double>(""), Error);
  CHECK_THROWS_AS(nct::parse_rotation<double>("0.5x"), Error);
  CHECK_THROWS_AS(nct::parse_rotation<double>("1.5"), Error);
}
