#pragma once

// Continued fractions of double-precision values, computed exactly.
//
// A finite double x in (0,1) *is* a dyadic rational M / 2^s; its continued
// fraction is therefore finite and computable exactly by integer Euclid in
// 128-bit arithmetic. That expansion is deterministic and is as faithful to
// the underlying real as 53 bits allow: the leading terms agree with the
// real's expansion while the convergent denominators stay below ~2^26, after
// which the dyadic truncation takes over. Callers that need reliability
// windows (Morita testing) enforce them on top of this exact expansion.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "nct/errors.hpp"

namespace nct {

// Partial quotients [a1, a2, ...] of x in (0,1), i.e. x = 1/(a1 + 1/(a2 + ...)),
// up to max_terms. The expansion ends early if the dyadic rational terminates.
// Quotients that do not fit int64 are clamped to INT64_MAX (they indicate a
// value indistinguishable from a rational at double precision).
inline std::vector<std::int64_t> continued_fraction(double x, int max_terms) {
  require(std::isfinite(x) && x > 0.0 && x < 1.0, errc::invalid_parameter,
          "continued fraction expects a value strictly inside (0,1)");
  require(max_terms >= 1, errc::invalid_parameter, "need at least one term");

  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, m in [1/2, 1)
  const int s = 53 - e;                // x = M / 2^s
  std::vector<std::int64_t> terms;
  if (s > 126) {
    // x < 2^-73: the first quotient alone exceeds any reliable window.
    terms.push_back(std::numeric_limits<std::int64_t>::max());
    return terms;
  }
  const auto M = static_cast<unsigned __int128>(std::ldexp(m, 53));
  unsigned __int128 a = static_cast<unsigned __int128>(1) << s;  // denominator
  unsigned __int128 b = M;                                       // numerator
  while (b != 0 && static_cast<int>(terms.size()) < max_terms) {
    const unsigned __int128 quot = a / b;
    const unsigned __int128 rem = a % b;
    constexpr auto cap =
        static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
    terms.push_back(quot > cap ? std::numeric_limits<std::int64_t>::max()
                               : static_cast<std::int64_t>(quot));
    a = b;
    b = rem;
  }
  return terms;
}

// Value of [0; a1, a2, ...] evaluated from the back: utility for building
// quadratic surds from periodic patterns and for round-trip checks.
inline double continued_fraction_value(const std::vector<std::int64_t>& terms) {
  require(!terms.empty(), errc::invalid_parameter, "empty continued fraction");
  double y = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    require(*it >= 1, errc::invalid_parameter, "partial quotients must be >= 1");
    y = 1.0 / (static_cast<double>(*it) + y);
  }
  return y;
}

}  // namespace nct
