#pragma once

// Rieffel-type projection synthesis and matrix-projection classification.
//
// The projection is assembled in the classical shape
//
//     p = g(U) V + f(U) + (g(U) V)^*
//
// where f is a smooth bump on the circle rising 0 -> 1 on [0, eps], equal to
// 1 on [eps, lambda], falling back to 0 on [lambda, lambda + eps], and
// g = sqrt(f (1 - f)) supported on the falling ramp alone. Because
// eps < min(lambda, 1 - lambda)/2, g and its rotate by lambda have disjoint
// supports, which is what makes p^2 = p hold exactly at the function level;
// the only computational error is the Fourier truncation at order M.
//
// The ramp profile is the integrated Beta(8,8) kernel
//
//     s(x) = integral_0^x u^7 (1-u)^7 du / B(8,8) = x^8 h(x),
//     h(x) = 6435 - 40040 x + 108108 x^2 - 163800 x^3 + 150150 x^4
//            - 83160 x^5 + 25740 x^6 - 3432 x^7   (integer coefficients),
//
// which satisfies s(x) + s(1-x) = 1 exactly (so the ramps are symmetric and
// trace(p) = integral of f = lambda), is C^7 at both ends (so the Fourier
// tails decay like m^-9 for f and m^-5 for g), and evaluates to ~1e-12
// absolute accuracy through the factored forms below. A piecewise-linear ramp
// profile cannot reach idempotency defects below ~6e-3 at M = 256 — its
// corner functions have m^-2 tails — which is why the profile is smooth here.
//
// The construction reports its own defects: tolerances are measured via the
// algebra's multiply/adjoint, never assumed.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "nct/algebra.hpp"
#include "nct/circle_function.hpp"
#include "nct/errors.hpp"
#include "nct/representations.hpp"
#include "nct/rotation.hpp"

namespace nct {

namespace detail {

// h(x) from the header comment; positive on [0,1], h(0) = 6435, h(1) = 1.
template <typename Scalar>
Scalar beta_ramp_cofactor(Scalar x) {
  constexpr Scalar c[8] = {Scalar(6435),   Scalar(-40040), Scalar(108108), Scalar(-163800),
                           Scalar(150150), Scalar(-83160), Scalar(25740),  Scalar(-3432)};
  Scalar acc = c[7];
  for (int i = 6; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

// s(x): 0 below 0, 1 above 1, monotone in between. Evaluated through the
// branch with no cancellation, using s(x) = x^8 h(x) and s(x) = 1 - s(1-x).
template <typename Scalar>
Scalar beta_ramp(Scalar x) {
  if (x <= Scalar(0)) return Scalar(0);
  if (x >= Scalar(1)) return Scalar(1);
  const auto eighth = [](Scalar t) {
    const Scalar t2 = t * t;
    const Scalar t4 = t2 * t2;
    return t4 * t4;
  };
  if (x <= Scalar(0.5)) return eighth(x) * beta_ramp_cofactor(x);
  return Scalar(1) - eighth(Scalar(1) - x) * beta_ramp_cofactor(Scalar(1) - x);
}

// sqrt(s(x) (1 - s(x))) = x^4 (1-x)^4 sqrt(h(x) h(1-x)): fully factored so
// the result is relatively accurate even where it vanishes to 4th order.
template <typename Scalar>
Scalar beta_ramp_geometric_mean(Scalar x) {
  if (x <= Scalar(0) || x >= Scalar(1)) return Scalar(0);
  const Scalar y = x * (Scalar(1) - x);
  const Scalar y2 = y * y;
  return y2 * y2 * std::sqrt(beta_ramp_cofactor(x) * beta_ramp_cofactor(Scalar(1) - x));
}

}  // namespace detail

// The flat-top bump: 0 -> 1 over [0, eps], 1 on [eps, lambda], 1 -> 0 over
// [lambda, lambda + eps]. Total variation exactly 2; integral exactly lambda.
template <typename Scalar>
CircleFunction<Scalar> rieffel_bump(Scalar lambda, Scalar eps) {
  auto eval = [lambda, eps](Scalar t) -> Scalar {
    if (t < Scalar(0) || t >= lambda + eps) return Scalar(0);
    if (t < eps) return detail::beta_ramp(t / eps);
    if (t <= lambda) return Scalar(1);
    return Scalar(1) - detail::beta_ramp((t - lambda) / eps);
  };
  return CircleFunction<Scalar>(eval, {{Scalar(0), lambda + eps}}, Scalar(2));
}

// g = sqrt(f (1 - f)), supported on the falling ramp [lambda, lambda + eps]
// only. Rises to 1/2 and back: total variation exactly 1.
template <typename Scalar>
CircleFunction<Scalar> rieffel_overlap(Scalar lambda, Scalar eps) {
  auto eval = [lambda, eps](Scalar t) -> Scalar {
    if (t <= lambda || t >= lambda + eps) return Scalar(0);
    return detail::beta_ramp_geometric_mean((t - lambda) / eps);
  };
  return CircleFunction<Scalar>(eval, {{lambda, lambda + eps}}, Scalar(1));
}

template <typename Scalar = double>
struct RieffelProjection {
  Element<Scalar> element;
  CircleFunction<Scalar> bump;     // f
  CircleFunction<Scalar> overlap;  // g
  Scalar idempotency_defect;       // l1(p^2 - p), measured
  Scalar selfadjointness_defect;   // l1(p - p^*), measured
  std::complex<Scalar> trace_value;
};

// (l1(p^2 - p), l1(p - p^*)).
template <typename Scalar>
std::pair<Scalar, Scalar> projection_defect(const Element<Scalar>& p) {
  return {l1_norm(multiply(p, p) - p), l1_norm(p - adjoint(p))};
}

// Builds p = g(U)V + f(U) + (g(U)V)^* at Fourier order M and measures its
// defects. Requires a floating (irrational-proxy) parameter: at an exact
// rational the trace range is the discrete matrix-algebra range and this
// construction does not apply.
template <typename Scalar>
RieffelProjection<Scalar> build_rieffel_projection(const RotationParameter<Scalar>& lambda,
                                                   Scalar eps, int M, int log2_grid = 15) {
  require(!lambda.is_exact(), errc::unsupported,
          "projection synthesis needs a floating rotation parameter, not an exact rational");
  const Scalar lv = lambda.value();
  require(lv > Scalar(0), errc::invalid_parameter, "rotation parameter must be positive");
  const Scalar cap = std::min(lv, Scalar(1) - lv) / Scalar(2);
  require(eps > Scalar(0) && eps < cap, errc::invalid_parameter,
          "ramp width must satisfy 0 < eps < min(lambda, 1 - lambda)/2");
  require(static_cast<Scalar>(M) >= Scalar(8) / eps, errc::invalid_parameter,
          "Fourier order too small to resolve the ramps (need M >= 8/eps)");

  CircleFunction<Scalar> f = rieffel_bump(lv, eps);
  CircleFunction<Scalar> g = rieffel_overlap(lv, eps);
  f.compute_fourier(M, log2_grid);
  g.compute_fourier(M, log2_grid);

  Element<Scalar> diag(lambda);
  Element<Scalar> upper(lambda);
  for (int m = -M; m <= M; ++m) {
    diag.accumulate(m, 0, f.fourier_coefficient(m));
    upper.accumulate(m, 1, g.fourier_coefficient(m));
  }
  const Element<Scalar> p = diag + upper + adjoint(upper);

  const auto [idem, sa] = projection_defect(p);
  return RieffelProjection<Scalar>{p, std::move(f), std::move(g), idem, sa, trace(p)};
}

// A validated matrix projection: square, self-adjoint and idempotent to
// 1e-10 in the entrywise max norm.
template <typename Scalar = double>
class MatrixProjection {
 public:
  static constexpr Scalar tolerance = Scalar(1e-10);

  explicit MatrixProjection(ComplexMatrix<Scalar> P) : P_(std::move(P)) {
    require(P_.rows() == P_.cols() && P_.rows() >= 1, errc::not_a_projection,
            "projection matrix must be square");
    const Scalar sa = (P_ - P_.adjoint()).cwiseAbs().maxCoeff();
    require(sa <= tolerance, errc::not_a_projection, "matrix is not self-adjoint");
    const Scalar idem = (P_ * P_ - P_).cwiseAbs().maxCoeff();
    require(idem <= tolerance, errc::not_a_projection, "matrix is not idempotent");
  }

  const ComplexMatrix<Scalar>& matrix() const noexcept { return P_; }
  Eigen::Index dimension() const noexcept { return P_.rows(); }

 private:
  ComplexMatrix<Scalar> P_;
};

// Rank of a matrix projection: the rounded real trace, which equals the
// number of eigenvalues >= 1/2. Rejects traces that are not close to an
// integer (the matrix was not a projection after all).
template <typename Scalar>
std::int64_t rank_classify(const MatrixProjection<Scalar>& proj) {
  const std::complex<Scalar> tr = proj.matrix().trace();
  const auto rounded = static_cast<std::int64_t>(std::llround(static_cast<double>(tr.real())));
  const Scalar dist = std::abs(tr - std::complex<Scalar>(static_cast<Scalar>(rounded), 0));
  require(dist <= Scalar(1e-6), errc::not_a_projection,
          "trace is not within 1e-6 of an integer");
  require(rounded >= 0 && rounded <= proj.dimension(), errc::not_a_projection,
          "trace outside [0, dimension]");
  return rounded;
}

}  // namespace nct
