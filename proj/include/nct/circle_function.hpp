#pragma once

// Real-valued functions on the circle [0,1) with optional truncated Fourier
// data. A CircleFunction is a closed-form evaluator plus the list of
// intervals where it can be nonzero (used to restrict quadrature) and its
// exact total variation when the builder knows it (all built-in profiles are
// piecewise monotone, so the builders do).
//
// Fourier coefficients are computed by a plain DFT on a uniform 2^k grid with
// the phase argument reduced modulo 1 in integer arithmetic, and the
// coefficient array is Hermitian-symmetrized (the functions are real), so any
// operator built from it is self-adjoint by construction. The reported
// `fourier_tail_l1` is the measured l1 mass of the first octave beyond the
// truncation order — a concrete lower-bound estimate of what was dropped.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "nct/errors.hpp"

namespace nct {

template <typename Scalar = double>
class CircleFunction {
 public:
  using Complex = std::complex<Scalar>;
  using Evaluator = std::function<Scalar(Scalar)>;
  using Interval = std::pair<Scalar, Scalar>;

  CircleFunction(Evaluator eval, std::vector<Interval> support, Scalar total_variation)
      : eval_(std::move(eval)), support_(std::move(support)), variation_(total_variation) {
    require(static_cast<bool>(eval_), errc::invalid_parameter, "empty evaluator");
    for (const auto& [a, b] : support_) {
      require(Scalar(0) <= a && a <= b && b <= Scalar(1), errc::invalid_parameter,
              "support interval outside [0,1]");
    }
  }

  static CircleFunction constant(Scalar value) {
    return CircleFunction([value](Scalar) { return value; }, {{Scalar(0), Scalar(1)}},
                          Scalar(0));
  }

  // Evaluates with the argument wrapped into [0,1).
  Scalar operator()(Scalar t) const {
    Scalar x = t - std::floor(t);
    if (x >= Scalar(1)) x = Scalar(0);
    return eval_(x);
  }

  const std::vector<Interval>& support() const noexcept { return support_; }

  // Exact for piecewise-monotone functions (all builders in this toolkit).
  Scalar total_variation() const noexcept { return variation_; }

  // Computes coefficients c_m for |m| <= order on a 2^log2_grid uniform grid,
  // restricted to the declared support. Also measures the first octave of
  // dropped coefficients as the reported truncation-tail estimate.
  void compute_fourier(int order, int log2_grid = 15) {
    require(order >= 1, errc::invalid_parameter, "Fourier order must be >= 1");
    require(log2_grid >= 3 && log2_grid <= 26, errc::invalid_parameter,
            "grid exponent out of range");
    const std::int64_t grid = std::int64_t(1) << log2_grid;
    require(2 * static_cast<std::int64_t>(order) < grid, errc::invalid_parameter,
            "Fourier order must be below the grid Nyquist limit");

    // Presample on the support only: everything outside contributes zero.
    std::vector<std::pair<std::int64_t, Scalar>> samples;
    for (const auto& [a, b] : support_) {
      const auto j0 = static_cast<std::int64_t>(std::ceil(double(a) * double(grid))) - 1;
      const auto j1 = static_cast<std::int64_t>(std::floor(double(b) * double(grid))) + 1;
      for (std::int64_t j = std::max<std::int64_t>(0, j0); j <= std::min(grid - 1, j1); ++j) {
        const Scalar x = static_cast<Scalar>(j) / static_cast<Scalar>(grid);
        const Scalar y = eval_(x);
        if (y != Scalar(0)) samples.emplace_back(j, y);
      }
    }

    const int extended = std::min<std::int64_t>(2 * order, grid / 2 - 1);
    std::vector<Complex> ext(static_cast<std::size_t>(extended) + 1, Complex(0));
    const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    for (int m = 0; m <= extended; ++m) {
      Complex acc(0);
      for (const auto& [j, y] : samples) {
        // exp(-2*pi*i*m*j/grid): reduce m*j mod grid exactly before exp.
        const std::int64_t r = (static_cast<__int128>(m) * j) & (grid - 1);
        if (r == 0) {
          acc += y;
        } else {
          acc += y * std::polar(Scalar(1),
                                -two_pi * (static_cast<Scalar>(r) / static_cast<Scalar>(grid)));
        }
      }
      ext[static_cast<std::size_t>(m)] = acc / static_cast<Scalar>(grid);
    }

    order_ = order;
    fourier_.assign(2 * static_cast<std::size_t>(order) + 1, Complex(0));
    for (int m = 0; m <= order; ++m) {
      fourier_[static_cast<std::size_t>(order + m)] = ext[static_cast<std::size_t>(m)];
      fourier_[static_cast<std::size_t>(order - m)] = std::conj(ext[static_cast<std::size_t>(m)]);
    }
    tail_l1_ = Scalar(0);
    for (int m = order + 1; m <= extended; ++m) {
      tail_l1_ += Scalar(2) * std::abs(ext[static_cast<std::size_t>(m)]);
    }
  }

  bool has_fourier() const noexcept { return order_ > 0; }
  int fourier_order() const noexcept { return order_; }

  // c_m for |m| <= fourier_order(), index m + fourier_order().
  const std::vector<Complex>& fourier() const {
    require(order_ > 0, errc::invalid_parameter, "Fourier data not computed yet");
    return fourier_;
  }

  Complex fourier_coefficient(int m) const {
    require(order_ > 0 && std::abs(m) <= order_, errc::invalid_parameter,
            "Fourier coefficient outside computed order");
    return fourier_[static_cast<std::size_t>(order_ + m)];
  }

  Scalar fourier_tail_l1() const noexcept { return tail_l1_; }

 private:
  Evaluator eval_;
  std::vector<Interval> support_;
  Scalar variation_ = Scalar(0);
  int order_ = 0;
  std::vector<Complex> fourier_;
  Scalar tail_l1_ = Scalar(0);
};

}  // namespace nct
