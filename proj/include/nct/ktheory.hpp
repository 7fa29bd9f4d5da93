#pragma once

// K-theory data for the rotation algebra at desk scale.
//
// K0 of A_lambda is Z + Z with trace pairing (m, n) -> m + n*lambda; the
// trace range (Z + lambda Z) intersected with [0,1] classifies projections.
// This header provides: the formal class type and its Grothendieck
// difference, enumeration of the trace range, inversion of a trace value back
// to its (m, n) label, the isomorphism invariant min({x}, 1-{x}), and the
// Morita test "same GL(2,Z) orbit <=> equal continued-fraction tails".

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nct/continued_fraction.hpp"
#include "nct/errors.hpp"
#include "nct/rotation.hpp"

namespace nct {

template <typename Scalar = double>
struct K0Class {
  std::int64_t m = 0;
  std::int64_t n = 0;
  RotationParameter<Scalar> lambda = RotationParameter<Scalar>::from_fraction(0, 1);

  // The class invariant under the canonical trace.
  Scalar pairing() const {
    return static_cast<Scalar>(m) + static_cast<Scalar>(n) * lambda.value();
  }
};

// Formal difference in K0: componentwise for classes over one algebra.
template <typename Scalar>
K0Class<Scalar> grothendieck_difference(const K0Class<Scalar>& a, const K0Class<Scalar>& b) {
  require(a.lambda == b.lambda, errc::parameter_mismatch,
          "K0 classes live over different rotation parameters");
  return K0Class<Scalar>{a.m - b.m, a.n - b.n, a.lambda};
}

// Formal difference of matrix-algebra ranks (K0 of a matrix algebra is Z).
inline std::int64_t grothendieck_difference(std::int64_t rank_a, std::int64_t rank_b) {
  return rank_a - rank_b;
}

// All values m + n*lambda inside [0,1] with |m| <= mmax, |n| <= nmax, sorted
// ascending and deduplicated at 1e-12. For an exact rational parameter the
// enumeration and deduplication run in integer arithmetic, so e.g.
// lambda = 1/4 yields exactly {0, 1/4, 1/2, 3/4, 1}.
template <typename Scalar>
std::vector<Scalar> trace_range_sample(const RotationParameter<Scalar>& lambda,
                                       std::int64_t mmax, std::int64_t nmax) {
  require(mmax >= 1 && nmax >= 1, errc::invalid_parameter, "mmax and nmax must be >= 1");
  std::vector<Scalar> out;
  if (lambda.is_exact()) {
    const auto [p, q] = *lambda.exact();
    std::set<std::int64_t> numerators;  // value = r/q with 0 <= r <= q
    for (std::int64_t n = -nmax; n <= nmax; ++n) {
      for (std::int64_t m = -mmax; m <= mmax; ++m) {
        const std::int64_t r = m * q + n * p;
        if (r >= 0 && r <= q) numerators.insert(r);
      }
    }
    out.reserve(numerators.size());
    for (const std::int64_t r : numerators) {
      out.push_back(static_cast<Scalar>(static_cast<double>(r) / static_cast<double>(q)));
    }
    return out;
  }
  const Scalar lv = lambda.value();
  std::vector<Scalar> vals;
  for (std::int64_t n = -nmax; n <= nmax; ++n) {
    for (std::int64_t m = -mmax; m <= mmax; ++m) {
      const Scalar v = static_cast<Scalar>(m) + static_cast<Scalar>(n) * lv;
      if (v >= Scalar(0) && v <= Scalar(1)) vals.push_back(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  for (const Scalar v : vals) {
    if (out.empty() || v - out.back() > Scalar(1e-12)) out.push_back(v);
  }
  return out;
}

// Inverts a trace value to its K0 label: the (m, n) with |n| <= nmax and
// |tau - m - n*lambda| <= tol. When several (m, n) hit the same *value* —
// unavoidable at rational lambda, where m + n p/q only depends on mq + np —
// the representative with the smallest |n| (ties: n > 0) is returned; if two
// candidates within tol carry genuinely different values, the resolution is
// ambiguous and the caller must tighten tol or nmax.
template <typename Scalar>
K0Class<Scalar> k0_from_trace(Scalar tau, const RotationParameter<Scalar>& lambda,
                              std::int64_t nmax, Scalar tol) {
  require(std::isfinite(static_cast<double>(tau)) && std::abs(tau) < Scalar(1e15),
          errc::invalid_parameter, "trace value out of range");
  require(nmax >= 0, errc::invalid_parameter, "nmax must be >= 0");
  require(tol > Scalar(0) && tol < Scalar(0.5), errc::invalid_parameter,
          "tol must lie in (0, 1/2)");

  struct Candidate {
    std::int64_t m, n;
    Scalar value;
  };
  const Scalar lv = lambda.value();
  std::vector<Candidate> hits;
  for (std::int64_t n = -nmax; n <= nmax; ++n) {
    const Scalar t = tau - static_cast<Scalar>(n) * lv;
    const auto m = static_cast<std::int64_t>(std::llround(static_cast<double>(t)));
    const Scalar value = static_cast<Scalar>(m) + static_cast<Scalar>(n) * lv;
    if (std::abs(tau - value) <= tol) hits.push_back({m, n, value});
  }
  require(!hits.empty(), errc::not_in_range,
          "no point of the trace range lies within tol of the given value");

  // Split genuine ambiguity (distinct values within tol) from redundant
  // labels of one value.
  bool same_value = true;
  if (lambda.is_exact()) {
    const auto [p, q] = *lambda.exact();
    const std::int64_t r0 = hits.front().m * q + hits.front().n * p;
    for (const auto& h : hits) same_value &= (h.m * q + h.n * p == r0);
  } else {
    for (const auto& h : hits) same_value &= (std::abs(h.value - hits.front().value) <= Scalar(1e-10));
  }
  require(same_value, errc::ambiguous_resolution,
          "more than one trace-range point within tol; tighten tol or nmax");

  const auto best = std::min_element(
      hits.begin(), hits.end(), [](const Candidate& a, const Candidate& b) {
        const std::int64_t na = a.n < 0 ? -a.n : a.n;
        const std::int64_t nb = b.n < 0 ? -b.n : b.n;
        if (na != nb) return na < nb;
        return a.n > b.n;  // tie at equal |n|: prefer positive n
      });
  return K0Class<Scalar>{best->m, best->n, lambda};
}

// min({x}, 1 - {x}): the complete isomorphism invariant of the parameter.
template <typename Scalar>
Scalar canonical_parameter(Scalar x) {
  require(std::isfinite(static_cast<double>(x)), errc::invalid_parameter,
          "parameter must be finite");
  Scalar f = x - std::floor(x);
  if (f >= Scalar(1)) f = Scalar(0);
  return std::min(f, Scalar(1) - f);
}

template <typename Scalar = double>
struct MoritaResult {
  bool equivalent = false;
  // Shift offsets (into the two expansions, after the discard prefix) at
  // which the compared windows align; present only when equivalent.
  std::optional<std::pair<int, int>> witness;
  std::vector<std::int64_t> cf_lambda;  // reliable expansions actually compared
  std::vector<std::int64_t> cf_mu;
  int depth = 0;
  int window = 0;
  int discard = 0;
};

namespace detail {
// Terms at or beyond this size mean the value is within ~2^-80 of a rational
// with denominator < 2^40: everything after such a term is dyadic-truncation
// noise, not information about an underlying irrational.
constexpr std::int64_t kMaxReliableQuotient = std::int64_t(1) << 40;

inline std::vector<std::int64_t> reliable_prefix(std::vector<std::int64_t> terms) {
  auto it = std::find_if(terms.begin(), terms.end(),
                         [](std::int64_t t) { return t >= kMaxReliableQuotient; });
  terms.erase(it, terms.end());
  return terms;
}
}  // namespace detail

// Morita equivalence of A_lambda and A_mu: lambda and mu lie on one GL(2,Z)
// orbit under linear fractional maps iff their continued fractions have equal
// tails. Concretely: after discarding the first 5 partial quotients, the two
// expansions must share a window of depth/2 consecutive terms, searched over
// all admissible alignments; the witness reports the matching offsets.
//
// depth is capped at 60 (beyond that double precision cannot certify the
// terms) and must be at least 12 (below that the comparison window is
// degenerate). Expansions that terminate or blow up before covering one full
// window mean the input is indistinguishable from a rational at this depth.
template <typename Scalar>
MoritaResult<Scalar> morita_equivalent(Scalar lambda, Scalar mu, int depth) {
  require(std::isfinite(static_cast<double>(lambda)) && lambda > Scalar(0) && lambda < Scalar(1),
          errc::invalid_parameter, "lambda must lie strictly inside (0,1)");
  require(std::isfinite(static_cast<double>(mu)) && mu > Scalar(0) && mu < Scalar(1),
          errc::invalid_parameter, "mu must lie strictly inside (0,1)");
  require(depth >= 12, errc::invalid_parameter,
          "depth below 12 leaves no comparison window");
  require(depth <= 60, errc::precision_loss,
          "depth above 60 exceeds double-precision continued-fraction reliability");

  const int window = depth / 2;
  const int discard = 5;
  MoritaResult<Scalar> res;
  res.depth = depth;
  res.window = window;
  res.discard = discard;
  res.cf_lambda =
      detail::reliable_prefix(continued_fraction(static_cast<double>(lambda), depth));
  res.cf_mu = detail::reliable_prefix(continued_fraction(static_cast<double>(mu), depth));

  const int len_a = static_cast<int>(res.cf_lambda.size());
  const int len_b = static_cast<int>(res.cf_mu.size());
  const int max_shift = depth - discard - window;
  const int shift_a = std::min(len_a - discard - window, max_shift);
  const int shift_b = std::min(len_b - discard - window, max_shift);
  require(shift_a >= 0 && shift_b >= 0, errc::degenerate_input,
          "continued fraction terminates before one comparison window: input is "
          "indistinguishable from a rational at this depth");

  for (int i = 0; i <= shift_a && !res.witness; ++i) {
    for (int j = 0; j <= shift_b; ++j) {
      if (std::equal(res.cf_lambda.begin() + discard + i,
                     res.cf_lambda.begin() + discard + i + window,
                     res.cf_mu.begin() + discard + j)) {
        res.witness = std::pair<int, int>{i, j};
        break;
      }
    }
  }
  res.equivalent = res.witness.has_value();
  return res;
}

}  // namespace nct
