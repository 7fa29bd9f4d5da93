#pragma once

// Concrete matrix realizations of the rotation algebra.
//
//  * WeylPair: the exact q x q clock-and-shift pair at lambda = p/q.
//    With v = diag(exp(2*pi*i*p*k/q)) and u the cyclic shift e_j -> e_{j-1},
//    the relation u v = exp(2*pi*i*p/q) v u holds entrywise.
//
//  * TruncatedRep: Fourier modes -N..N of the natural representation on the
//    circle. v = diag(exp(2*pi*i*lambda*k)), u the one-step shift with
//    zero-padding (a partial isometry, not unitary). Representing an element
//    here is the exact compression P a P of the biinfinite operator, so the
//    resulting operator norms are honest lower bounds for the C*-norm and the
//    companion upper bound is the coefficient l1 norm.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>

#include "nct/algebra.hpp"
#include "nct/errors.hpp"
#include "nct/rotation.hpp"

namespace nct {

template <typename Scalar = double>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct WeylPair {
  std::int64_t p = 0;
  std::int64_t q = 1;
  RotationParameter<Scalar> lambda = RotationParameter<Scalar>::from_fraction(0, 1);
  ComplexMatrix<Scalar> u;
  ComplexMatrix<Scalar> v;
};

template <typename Scalar = double>
struct TruncatedRep {
  RotationParameter<Scalar> lambda = RotationParameter<Scalar>::from_value(Scalar(0));
  std::int64_t band = 1;  // modes -band..band, dimension 2*band+1
  ComplexMatrix<Scalar> u;
  ComplexMatrix<Scalar> v;
};

// Exact clock-and-shift pair for lambda = p/q. Requires q >= 1 and a reduced
// fraction (p is first brought into [0, q)).
template <typename Scalar = double>
WeylPair<Scalar> weyl_pair_rational(std::int64_t p, std::int64_t q) {
  require(q >= 1, errc::invalid_parameter, "Weyl pair needs q >= 1");
  const std::int64_t pr = detail::mod_floor(p, q);
  require(detail::gcd64(pr == 0 ? q : pr, q) == 1, errc::invalid_parameter,
          "Weyl pair needs gcd(p, q) = 1");
  WeylPair<Scalar> w;
  w.p = pr;
  w.q = q;
  w.lambda = RotationParameter<Scalar>::from_fraction(pr, q);
  w.u = ComplexMatrix<Scalar>::Zero(q, q);
  w.v = ComplexMatrix<Scalar>::Zero(q, q);
  for (std::int64_t j = 0; j < q; ++j) {
    w.u((j - 1 + q) % q, j) = std::complex<Scalar>(1);
    w.v(j, j) = unit_phase(j, w.lambda);
  }
  return w;
}

// Truncated shift/diagonal representation on Fourier modes -N..N.
template <typename Scalar>
TruncatedRep<Scalar> truncated_rep(const RotationParameter<Scalar>& lambda, std::int64_t N) {
  require(N >= 1, errc::invalid_parameter, "truncation band must be >= 1");
  TruncatedRep<Scalar> r;
  r.lambda = lambda;
  r.band = N;
  const std::int64_t d = 2 * N + 1;
  r.u = ComplexMatrix<Scalar>::Zero(d, d);
  r.v = ComplexMatrix<Scalar>::Zero(d, d);
  for (std::int64_t idx = 0; idx < d; ++idx) {
    if (idx >= 1) r.u(idx - 1, idx) = std::complex<Scalar>(1);
    r.v(idx, idx) = unit_phase(idx - N, lambda);
  }
  return r;
}

// sum c_{m,n} u^m v^n on the Weyl pair. Built monomial-by-monomial with exact
// index arithmetic and exactly reduced phases, so this is a *-homomorphism up
// to one rounding per entry.
template <typename Scalar>
ComplexMatrix<Scalar> represent(const Element<Scalar>& a, const WeylPair<Scalar>& w) {
  require(a.lambda() == w.lambda, errc::parameter_mismatch,
          "element parameter does not match the Weyl pair's p/q");
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(w.q, w.q);
  for (const auto& [key, c] : a.coefficients()) {
    const auto [m, n] = key;
    for (std::int64_t j = 0; j < w.q; ++j) {
      // (u^m v^n) e_j = phase(n*j) e_{(j-m) mod q}
      out(detail::mod_floor(j - m, w.q), j) += detail::rotate(c, n * j, w.lambda);
    }
  }
  return out;
}

// Exact compression of the element to the band: entry (k-m, k) gets
// c * phase(n*k) whenever both indices lie in the band. Support must satisfy
// |m|, |n| <= band.
template <typename Scalar>
ComplexMatrix<Scalar> represent(const Element<Scalar>& a, const TruncatedRep<Scalar>& r) {
  require(a.lambda() == r.lambda, errc::parameter_mismatch,
          "element parameter does not match the truncated representation");
  const std::int64_t N = r.band;
  const auto mag = [](std::int64_t x) { return x < 0 ? -x : x; };
  for (const auto& [key, c] : a.coefficients()) {
    require(mag(key.first) <= N && mag(key.second) <= N, errc::support_exceeds_band,
            "element support does not fit inside the truncation band");
  }
  const std::int64_t d = 2 * N + 1;
  ComplexMatrix<Scalar> out = ComplexMatrix<Scalar>::Zero(d, d);
  for (const auto& [key, c] : a.coefficients()) {
    const auto [m, n] = key;
    for (std::int64_t k = -N; k <= N; ++k) {
      const std::int64_t kk = k - m;
      if (kk < -N || kk > N) continue;
      out(kk + N, k + N) += detail::rotate(c, n * k, r.lambda);
    }
  }
  return out;
}

// |Trace(PQ - QP)| / (1 + ||P||_F ||Q||_F): the finite-dimensional trace
// obstruction. Always ~0, which is exactly why no finite matrix pair can
// satisfy PQ - QP = lambda*I with lambda != 0.
template <typename Scalar>
Scalar commutator_trace_check(const ComplexMatrix<Scalar>& P, const ComplexMatrix<Scalar>& Q) {
  require(P.rows() == P.cols() && Q.rows() == Q.cols() && P.rows() == Q.rows() && P.rows() >= 1,
          errc::dimension_mismatch, "need square matrices of equal dimension");
  // Trace(PQ) = sum_{i,k} P(i,k) Q(k,i), computed without forming products.
  const std::complex<Scalar> tr_pq = P.cwiseProduct(Q.transpose()).sum();
  const std::complex<Scalar> tr_qp = Q.cwiseProduct(P.transpose()).sum();
  return std::abs(tr_pq - tr_qp) / (Scalar(1) + P.norm() * Q.norm());
}

// Largest singular value of the compression of `a` to the band N: a lower
// bound for the C*-norm that is nondecreasing in N, with l1_norm(a) the
// matching upper bound.
template <typename Scalar>
Scalar operator_norm_lower_bound(const Element<Scalar>& a, std::int64_t N) {
  const auto rep = truncated_rep(a.lambda(), N);
  const ComplexMatrix<Scalar> A = represent(a, rep);
  // sigma_max(A) = sqrt(lambda_max(A^H A)); the Gram matrix is Hermitian by
  // construction, so the symmetric eigensolver applies.
  const ComplexMatrix<Scalar> gram = A.adjoint() * A;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(gram, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, errc::numerical_failure,
          "eigenvalue solver failed on the Gram matrix");
  const Scalar top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(Scalar(0), top));
}

}  // namespace nct
