#pragma once

// RotationParameter: the angle lambda of the rotation algebra A_lambda, either
// a plain floating value in [0,1) or an exact reduced fraction p/q.
//
// This header is the single source of truth for every phase in the toolkit:
// unit_phase(k, lambda) = exp(2*pi*i * k * lambda) with the argument reduced
// exactly modulo 1 in integer arithmetic *before* exponentiation, so the phase
// error stays O(1 ulp) for |k| up to 2^62 instead of growing with k.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "nct/errors.hpp"

namespace nct {

namespace detail {

// gcd on possibly-negative 64-bit values, result > 0 unless both are 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(
      std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
               static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

// Euclidean remainder: result in [0, m) for m > 0.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

template <typename Scalar = double>
class RotationParameter {
  // The exact modular reduction below multiplies a 64-bit k against the
  // scalar's integer mantissa inside a signed 128-bit product, which needs
  // 63 + digits <= 126.
  static_assert(std::numeric_limits<Scalar>::is_iec559,
                "RotationParameter requires an IEEE-754 scalar type");
  static_assert(std::numeric_limits<Scalar>::digits <= 63,
                "mantissa must fit the 128-bit reduction (float/double)");

 public:
  using value_type = Scalar;

  // Floating parameter ("irrational proxy"): no exact fraction attached.
  static RotationParameter from_value(Scalar value) {
    require(std::isfinite(static_cast<double>(value)) && value >= Scalar(0) && value < Scalar(1),
            errc::invalid_parameter, "rotation parameter must lie in [0,1)");
    RotationParameter r;
    r.value_ = value + Scalar(0);  // normalizes -0.0 to +0.0
    return r;
  }

  // Exact rational parameter p/q; p is reduced into [0, q) and the fraction
  // to lowest terms, so distinct constructions of the same rational compare
  // equal bit-for-bit.
  static RotationParameter from_fraction(std::int64_t p, std::int64_t q) {
    require(q >= 1, errc::invalid_parameter, "fraction denominator must be >= 1");
    p = detail::mod_floor(p, q);
    const std::int64_t g = p == 0 ? q : detail::gcd64(p, q);
    p /= g;
    q /= g;
    RotationParameter r;
    r.value_ = static_cast<Scalar>(static_cast<double>(p) / static_cast<double>(q));
    r.exact_ = std::pair<std::int64_t, std::int64_t>{p, q};
    return r;
  }

  Scalar value() const noexcept { return value_; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<std::pair<std::int64_t, std::int64_t>>& exact() const noexcept {
    return exact_;
  }

  // Elements over different parameters never mix: equality is bit-exact on
  // the value and exact on the attached fraction.
  friend bool operator==(const RotationParameter& a, const RotationParameter& b) {
    return std::memcmp(&a.value_, &b.value_, sizeof(Scalar)) == 0 && a.exact_ == b.exact_;
  }
  friend bool operator!=(const RotationParameter& a, const RotationParameter& b) {
    return !(a == b);
  }

  // frac(k * lambda) in [0,1), computed exactly in integer arithmetic and
  // rounded once at the end.
  //
  //  * exact p/q:   ((k*p) mod q) / q with a 128-bit product;
  //  * floating:    lambda's value is the dyadic rational M / 2^s, so
  //                 frac(k*lambda) = ((k*M) mod 2^s) / 2^s. The product k*M
  //                 fits a signed 128-bit integer, and the mod is a mask.
  //                 When s is too large for that (lambda < 2^-63) the product
  //                 |k*lambda| is below 1 and a direct multiply is exact
  //                 enough (single rounding).
  Scalar frac_multiple(std::int64_t k) const {
    if (exact_) {
      const auto [p, q] = *exact_;
      if (p == 0) return Scalar(0);
      __int128 r = static_cast<__int128>(k) * p % q;
      if (r < 0) r += q;
      return static_cast<Scalar>(static_cast<double>(static_cast<std::int64_t>(r)) /
                                 static_cast<double>(q));
    }
    if (value_ == Scalar(0) || k == 0) return Scalar(0);
    constexpr int digits = std::numeric_limits<Scalar>::digits;
    int e = 0;
    const Scalar m = std::frexp(value_, &e);  // value = m * 2^e, m in [1/2, 1)
    const int s = digits - e;                 // value = M / 2^s exactly
    if (s >= digits + 63) {
      // value < 2^-63, so |k * value| < 1: no reduction needed.
      const Scalar prod = static_cast<Scalar>(k) * value_;
      return prod >= Scalar(0) ? prod : prod + Scalar(1);
    }
    const auto M = static_cast<std::int64_t>(std::ldexp(m, digits));
    const __int128 prod = static_cast<__int128>(k) * M;
    const unsigned __int128 mask = ((static_cast<unsigned __int128>(1)) << s) - 1;
    // Two's-complement masking is exactly "mod 2^s" for negative products too.
    const unsigned __int128 r = static_cast<unsigned __int128>(prod) & mask;
    const auto hi = static_cast<std::uint64_t>(r >> 64);
    const auto lo = static_cast<std::uint64_t>(r);
    const Scalar rd = static_cast<Scalar>(std::ldexp(static_cast<double>(hi), 64) +
                                          static_cast<double>(lo));
    Scalar out = std::ldexp(rd, -s);
    if (out >= Scalar(1)) out -= Scalar(1);  // guard the r ~ 2^s rounding edge
    return out;
  }

 private:
  Scalar value_ = Scalar(0);
  std::optional<std::pair<std::int64_t, std::int64_t>> exact_;
};

// exp(2*pi*i * k * lambda) with exact argument reduction. Quarter-turn
// phases come out as exact +-1 / +-i so that the common rational cases
// (and every phase with k*lambda an integer) stay free of rounding.
template <typename Scalar>
std::complex<Scalar> unit_phase(std::int64_t k, const RotationParameter<Scalar>& lambda) {
  const Scalar f = lambda.frac_multiple(k);
  if (f == Scalar(0)) return {Scalar(1), Scalar(0)};
  if (f == Scalar(0.25)) return {Scalar(0), Scalar(1)};
  if (f == Scalar(0.5)) return {Scalar(-1), Scalar(0)};
  if (f == Scalar(0.75)) return {Scalar(0), Scalar(-1)};
  const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * f;
  return std::polar(Scalar(1), angle);
}

// Parses "p/q" (exact) or a decimal in [0,1) (floating proxy).
template <typename Scalar = double>
RotationParameter<Scalar> parse_rotation(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash != std::string::npos) {
      const std::int64_t p = std::stoll(text.substr(0, slash), &used);
      require(used == slash, errc::invalid_parameter, "malformed fraction: " + text);
      const std::int64_t q = std::stoll(text.substr(slash + 1), &used);
      require(used == text.size() - slash - 1, errc::invalid_parameter,
              "malformed fraction: " + text);
      return RotationParameter<Scalar>::from_fraction(p, q);
    }
    const double v = std::stod(text, &used);
    require(used == text.size(), errc::invalid_parameter, "malformed number: " + text);
    return RotationParameter<Scalar>::from_value(static_cast<Scalar>(v));
  } catch (const std::invalid_argument&) {
    raise(errc::invalid_parameter, "cannot parse rotation parameter: " + text);
  } catch (const std::out_of_range&) {
    raise(errc::invalid_parameter, "rotation parameter out of range: " + text);
  }
}

}  // namespace nct
