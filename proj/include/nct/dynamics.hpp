#pragma once

// Circle-rotation dynamics and the torus flow of slope lambda.
//
//  * orbit: theta0 + k*lambda mod 1 with each point reduced exactly —
//    frac(k*lambda) comes from the integer reduction in RotationParameter, so
//    the error per point is a couple of ulps independent of k, and exact
//    rational parameters give exactly periodic orbits.
//  * three_gap_stats: the distinct circular gap lengths (Steinhaus: never
//    more than three).
//  * discrepancy: the star discrepancy by the exact sorted-points formula.
//  * birkhoff_average: time averages along the orbit, the dynamical shadow
//    of the canonical trace.
//  * leaf_trace: the flow line through (0, t0) on the glued square, where
//    exiting at (1, t) re-enters at (0, t + lambda mod 1); closes iff the
//    slope is rational.
//  * transverse_measure_estimate: hit-count measure of an arc on the
//    transverse circle, the invariant transverse measure at desk scale.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nct/errors.hpp"
#include "nct/rotation.hpp"

namespace nct {

template <typename Scalar = double>
struct Orbit {
  Scalar theta0 = Scalar(0);
  RotationParameter<Scalar> lambda = RotationParameter<Scalar>::from_fraction(0, 1);
  std::vector<Scalar> points;  // points[k] = theta0 + k*lambda mod 1
};

template <typename Scalar>
Orbit<Scalar> orbit(Scalar theta0, const RotationParameter<Scalar>& lambda, std::int64_t N) {
  require(theta0 >= Scalar(0) && theta0 < Scalar(1), errc::invalid_parameter,
          "theta0 must lie in [0,1)");
  require(N >= 1, errc::invalid_parameter, "orbit length must be >= 1");
  Orbit<Scalar> o{theta0, lambda, {}};
  o.points.resize(static_cast<std::size_t>(N));
  for (std::int64_t k = 0; k < N; ++k) {
    Scalar s = theta0 + lambda.frac_multiple(k);  // in [0, 2)
    if (s >= Scalar(1)) s -= Scalar(1);
    o.points[static_cast<std::size_t>(k)] = s;
  }
  return o;
}

// Sorted distinct circular gap lengths between consecutive orbit points,
// deduplicated at 1e-10. By the three-distance theorem the result has at
// most three entries for any rotation orbit with distinct points.
template <typename Scalar>
std::vector<Scalar> three_gap_stats(const Orbit<Scalar>& o) {
  const std::size_t N = o.points.size();
  if (N == 1) return {Scalar(1)};
  std::vector<Scalar> sorted = o.points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Scalar> gaps;
  gaps.reserve(N);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    const Scalar g = sorted[i + 1] - sorted[i];
    require(g != Scalar(0), errc::degenerate_input, "orbit points are not distinct");
    gaps.push_back(g);
  }
  gaps.push_back((Scalar(1) - sorted.back()) + sorted.front());  // wraparound gap
  require(gaps.back() != Scalar(0), errc::degenerate_input, "orbit points are not distinct");
  std::sort(gaps.begin(), gaps.end());
  std::vector<Scalar> distinct;
  for (const Scalar g : gaps) {
    if (distinct.empty() || g - distinct.back() > Scalar(1e-10)) distinct.push_back(g);
  }
  return distinct;
}

// Star discrepancy D*_N by the exact formula on sorted points:
// max_i max(|x_(i) - (i-1)/N|, |x_(i) - i/N|).
template <typename Scalar>
Scalar discrepancy(const Orbit<Scalar>& o) {
  std::vector<Scalar> sorted = o.points;
  std::sort(sorted.begin(), sorted.end());
  const auto N = static_cast<Scalar>(sorted.size());
  Scalar d(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Scalar lo = static_cast<Scalar>(i) / N;
    const Scalar hi = static_cast<Scalar>(i + 1) / N;
    d = std::max(d, std::max(std::abs(sorted[i] - lo), std::abs(sorted[i] - hi)));
  }
  return d;
}

// (1/N) sum f(theta0 + k lambda): converges to the trace-integral of f for
// equidistributed orbits, with |average - integral| <= variation(f) * D*_N.
template <typename Scalar, typename F>
std::complex<Scalar> birkhoff_average(F&& f, const Orbit<Scalar>& o) {
  std::complex<Scalar> acc(0);
  for (const Scalar x : o.points) acc += std::complex<Scalar>(f(x));
  return acc / static_cast<Scalar>(o.points.size());
}

template <typename Scalar, typename F>
std::complex<Scalar> birkhoff_average(F&& f, Scalar theta0,
                                      const RotationParameter<Scalar>& lambda, std::int64_t N) {
  return birkhoff_average(std::forward<F>(f), orbit(theta0, lambda, N));
}

template <typename Scalar = double>
struct LeafSegment {
  Scalar x0, y0, x1, y1;
};

template <typename Scalar = double>
struct LeafTrace {
  RotationParameter<Scalar> lambda = RotationParameter<Scalar>::from_fraction(0, 1);
  Scalar t0 = Scalar(0);
  // Chart crossings in flow order; segment k runs from (0, h_k) to (1, h_k)
  // and the gluing h_{k+1} = h_k + lambda mod 1 holds exactly as computed.
  std::vector<LeafSegment<Scalar>> segments;
  bool closed = false;
  std::optional<std::int64_t> period;
  Scalar min_return_distance = Scalar(1);
};

namespace detail {
template <typename Scalar>
Scalar wrap_unit(Scalar x) {
  Scalar y = x - std::floor(x);
  if (y >= Scalar(1)) y = Scalar(0);
  return y;
}

template <typename Scalar>
Scalar circle_distance(Scalar a, Scalar b) {
  const Scalar d = std::abs(a - b);
  return std::min(d, Scalar(1) - d);
}
}  // namespace detail

// Traces the leaf through (0, t0): each chart crossing exits at (1, h) and
// re-enters at (0, h + lambda mod 1). The trace stops at the first return
// within tol of t0 (closed leaf, rational slope: period exactly q) or after
// max_wraps crossings (irrational-proxy slope: never closes, and the minimum
// return distance over the trace is reported).
template <typename Scalar>
LeafTrace<Scalar> leaf_trace(const RotationParameter<Scalar>& lambda, Scalar t0,
                             std::int64_t max_wraps, Scalar tol = Scalar(1e-9)) {
  require(t0 >= Scalar(0) && t0 < Scalar(1), errc::invalid_parameter, "t0 must lie in [0,1)");
  require(max_wraps >= 1, errc::invalid_parameter, "max_wraps must be >= 1");
  require(tol > Scalar(0) && tol < Scalar(0.5), errc::invalid_parameter,
          "closure tolerance must lie in (0, 1/2)");
  LeafTrace<Scalar> leaf;
  leaf.lambda = lambda;
  leaf.t0 = t0;
  Scalar h = t0;
  for (std::int64_t k = 0; k < max_wraps; ++k) {
    leaf.segments.push_back({Scalar(0), h, Scalar(1), h});
    h = detail::wrap_unit(h + lambda.value());  // gluing: (1, h) -> (0, h + lambda mod 1)
    const Scalar dist = detail::circle_distance(h, t0);
    leaf.min_return_distance = std::min(leaf.min_return_distance, dist);
    if (dist <= tol) {
      leaf.closed = true;
      leaf.period = k + 1;
      break;
    }
  }
  return leaf;
}

// Fraction of the first N orbit points landing in the half-open arc [a, b):
// estimates the invariant transverse measure (= Lebesgue length) of the arc.
template <typename Scalar>
Scalar transverse_measure_estimate(const RotationParameter<Scalar>& lambda,
                                   std::pair<Scalar, Scalar> arc, Scalar theta0,
                                   std::int64_t N) {
  const auto [a, b] = arc;
  require(a >= Scalar(0) && a <= b && b <= Scalar(1), errc::invalid_parameter,
          "arc must satisfy 0 <= a <= b <= 1");
  const Orbit<Scalar> o = orbit(theta0, lambda, N);
  std::int64_t hits = 0;
  for (const Scalar x : o.points) {
    if (x >= a && x < b) ++hits;
  }
  return static_cast<Scalar>(hits) / static_cast<Scalar>(N);
}

}  // namespace nct
