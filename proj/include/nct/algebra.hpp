#pragma once

// Finitely supported elements of the rotation algebra A_lambda in normal
// order: a = sum c_{m,n} U^m V^n with U-powers leftmost, where U, V are
// unitaries obeying U V = exp(2*pi*i*lambda) V U.
//
// Normal-ordering that relation once gives the whole product rule:
//
//   (U^m V^n)(U^p V^q) = phase(-n*p) * U^{m+p} V^{n+q},
//   (c U^m V^n)^*      = conj(c) * phase(-m*n) * U^{-m} V^{-n},
//
// with phase(k) = exp(2*pi*i*k*lambda) supplied by unit_phase(), the single
// source of truth for the sign convention. Coefficients are kept in a model
// of canonical sparse form: magnitudes below 1e-30 are pruned after every
// arithmetic step so rounding dust never inflates supports.

#include <complex>
#include <cstdint>
#include <map>
#include <utility>

#include "nct/errors.hpp"
#include "nct/rotation.hpp"

namespace nct {

template <typename Scalar = double>
class Element {
 public:
  using Complex = std::complex<Scalar>;
  using Key = std::pair<std::int64_t, std::int64_t>;  // (m, n) powers of (U, V)
  using Coefficients = std::map<Key, Complex>;

  static constexpr Scalar prune_threshold = Scalar(1e-30);

  explicit Element(const RotationParameter<Scalar>& lambda) : lambda_(lambda) {}

  const RotationParameter<Scalar>& lambda() const noexcept { return lambda_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  std::size_t support_size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Complex coefficient(std::int64_t m, std::int64_t n) const {
    const auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? Complex(0) : it->second;
  }

  // Adds c * U^m V^n, pruning if the sum falls below canonical-form threshold.
  void accumulate(std::int64_t m, std::int64_t n, Complex c) {
    const Key key{m, n};
    const auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      if (std::abs(c) >= prune_threshold) coeffs_.emplace(key, c);
      return;
    }
    it->second += c;
    if (std::abs(it->second) < prune_threshold) coeffs_.erase(it);
  }

 private:
  RotationParameter<Scalar> lambda_;
  Coefficients coeffs_;
};

namespace detail {
template <typename Scalar>
void require_same_parameter(const Element<Scalar>& a, const Element<Scalar>& b) {
  require(a.lambda() == b.lambda(), errc::parameter_mismatch,
          "elements built over different rotation parameters");
}

// c * phase, skipping the multiply entirely when the phase is exactly 1 so
// phase-free paths (axis monomials, integer k*lambda) stay bit-exact.
template <typename Scalar>
std::complex<Scalar> rotate(std::complex<Scalar> c, std::int64_t k,
                            const RotationParameter<Scalar>& lambda) {
  const std::complex<Scalar> z = unit_phase(k, lambda);
  if (z.real() == Scalar(1) && z.imag() == Scalar(0)) return c;
  return c * z;
}
}  // namespace detail

// --- constructors ------------------------------------------------------------

template <typename Scalar>
Element<Scalar> monomial(std::int64_t m, std::int64_t n, std::complex<Scalar> c,
                         const RotationParameter<Scalar>& lambda) {
  Element<Scalar> e(lambda);
  e.accumulate(m, n, c);
  return e;
}

template <typename Scalar = double>
Element<Scalar> identity(const RotationParameter<Scalar>& lambda) {
  return monomial<Scalar>(0, 0, {Scalar(1), Scalar(0)}, lambda);
}

template <typename Scalar = double>
Element<Scalar> generator_u(const RotationParameter<Scalar>& lambda) {
  return monomial<Scalar>(1, 0, {Scalar(1), Scalar(0)}, lambda);
}

template <typename Scalar = double>
Element<Scalar> generator_v(const RotationParameter<Scalar>& lambda) {
  return monomial<Scalar>(0, 1, {Scalar(1), Scalar(0)}, lambda);
}

// --- arithmetic --------------------------------------------------------------

template <typename Scalar>
Element<Scalar> add(const Element<Scalar>& a, const Element<Scalar>& b) {
  detail::require_same_parameter(a, b);
  Element<Scalar> out = a;
  for (const auto& [key, c] : b.coefficients()) out.accumulate(key.first, key.second, c);
  return out;
}

template <typename Scalar>
Element<Scalar> scale(std::complex<Scalar> s, const Element<Scalar>& a) {
  Element<Scalar> out(a.lambda());
  for (const auto& [key, c] : a.coefficients()) out.accumulate(key.first, key.second, s * c);
  return out;
}

template <typename Scalar>
Element<Scalar> multiply(const Element<Scalar>& a, const Element<Scalar>& b) {
  detail::require_same_parameter(a, b);
  Element<Scalar> out(a.lambda());
  for (const auto& [ka, ca] : a.coefficients()) {
    for (const auto& [kb, cb] : b.coefficients()) {
      // (U^m V^n)(U^p V^q) = phase(-n*p) U^{m+p} V^{n+q}
      const std::int64_t reorder = -ka.second * kb.first;
      out.accumulate(ka.first + kb.first, ka.second + kb.second,
                     detail::rotate(ca * cb, reorder, a.lambda()));
    }
  }
  return out;
}

template <typename Scalar>
Element<Scalar> adjoint(const Element<Scalar>& a) {
  Element<Scalar> out(a.lambda());
  for (const auto& [key, c] : a.coefficients()) {
    // (c U^m V^n)^* = conj(c) phase(-m*n) U^{-m} V^{-n}
    out.accumulate(-key.first, -key.second,
                   detail::rotate(std::conj(c), -key.first * key.second, a.lambda()));
  }
  return out;
}

// Normalized trace: picks the constant coefficient c_{0,0}; trace(1) = 1.
template <typename Scalar>
std::complex<Scalar> trace(const Element<Scalar>& a) {
  return a.coefficient(0, 0);
}

// l1 norm of the coefficients; dominates the operator norm in any
// representation by unitaries, so it calibrates every tolerance downstream.
template <typename Scalar>
Scalar l1_norm(const Element<Scalar>& a) {
  Scalar s(0);
  for (const auto& [key, c] : a.coefficients()) s += std::abs(c);
  return s;
}

// --- operator sugar ----------------------------------------------------------

template <typename Scalar>
Element<Scalar> operator+(const Element<Scalar>& a, const Element<Scalar>& b) {
  return add(a, b);
}

template <typename Scalar>
Element<Scalar> operator-(const Element<Scalar>& a) {
  return scale<Scalar>({Scalar(-1), Scalar(0)}, a);
}

template <typename Scalar>
Element<Scalar> operator-(const Element<Scalar>& a, const Element<Scalar>& b) {
  return add(a, -b);
}

template <typename Scalar>
Element<Scalar> operator*(const Element<Scalar>& a, const Element<Scalar>& b) {
  return multiply(a, b);
}

template <typename Scalar>
Element<Scalar> operator*(std::complex<Scalar> s, const Element<Scalar>& a) {
  return scale(s, a);
}

template <typename Scalar>
Element<Scalar> operator*(Scalar s, const Element<Scalar>& a) {
  return scale<Scalar>({s, Scalar(0)}, a);
}

}  // namespace nct
