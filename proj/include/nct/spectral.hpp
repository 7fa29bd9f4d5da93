#pragma once

// Harper operator spectra and gap labeling.
//
// At rational parameter p/q the Weyl pair gives a q-dimensional block of the
// algebra for each pair of Bloch phases; the Harper operator
//
//   H(theta1, theta2) = e^{i theta1} U + e^{-i theta1} U* +
//                       mu (e^{i theta2} V + e^{-i theta2} V*)
//
// is the standard self-adjoint element whose spectrum, swept over the phase
// torus, produces the Hofstadter butterfly. The integrated density of states
// evaluated inside a spectral gap equals the trace of a spectral projection
// and therefore lies on the trace range {m + n p/q}; gap_labels recovers the
// integer pair (m, n) for every detected gap.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nct/errors.hpp"
#include "nct/ktheory.hpp"
#include "nct/representations.hpp"
#include "nct/rotation.hpp"

namespace nct {

template <typename Scalar = double>
struct SpectrumSample {
  std::int64_t p = 0;
  std::int64_t q = 1;
  Scalar coupling = Scalar(1);
  int grid_size = 1;
  // Bloch phases in row-major order, theta1 outer: (2*pi*k1/G, 2*pi*k2/G).
  std::vector<std::pair<Scalar, Scalar>> phase_grid;
  // Ascending q-vector of eigenvalues for each phase, aligned with phase_grid.
  std::vector<std::vector<Scalar>> eigenvalues_by_phase;
  // All q * G^2 eigenvalues merged and sorted ascending.
  std::vector<Scalar> eigenvalues;
  // Band hulls: band b sweeps [band_min[b], band_max[b]] over the phase grid.
  std::vector<Scalar> band_min;
  std::vector<Scalar> band_max;
};

template <typename Scalar = double>
struct GapLabel {
  Scalar energy_lo = Scalar(0);  // top of the band below the gap
  Scalar energy_hi = Scalar(0);  // bottom of the band above the gap
  Scalar width = Scalar(0);
  Scalar ids = Scalar(0);  // integrated density of states inside the gap
  K0Class<Scalar> k0;      // recovered (m, n) with ids ~ m + n p/q
  Scalar residual = Scalar(0);
};

// q x q Harper matrix at one Bloch phase pair; Hermitian by construction
// (assembled as A + A*, which is exact in floating point).
template <typename Scalar>
ComplexMatrix<Scalar> harper_matrix(std::int64_t p, std::int64_t q, Scalar mu,
                                    std::pair<Scalar, Scalar> phases) {
  require(mu > Scalar(0), errc::invalid_parameter, "coupling mu must be > 0");
  const WeylPair<Scalar> w = weyl_pair_rational<Scalar>(p, q);
  const std::complex<Scalar> z1 = std::polar(Scalar(1), phases.first);
  const std::complex<Scalar> z2 = std::polar(Scalar(1), phases.second);
  const ComplexMatrix<Scalar> a = z1 * w.u + (mu * z2) * w.v;
  return a + a.adjoint();
}

// Eigenvalues of the Harper operator over the uniform half-open G x G Bloch
// grid (phases 2*pi*k/G, k = 0..G-1). Deterministic for fixed inputs.
template <typename Scalar>
SpectrumSample<Scalar> spectrum_sweep(std::int64_t p, std::int64_t q, Scalar mu,
                                      int grid_size) {
  require(grid_size >= 1, errc::invalid_parameter, "grid_size must be >= 1");
  require(mu > Scalar(0), errc::invalid_parameter, "coupling mu must be > 0");
  const WeylPair<Scalar> w = weyl_pair_rational<Scalar>(p, q);

  SpectrumSample<Scalar> s;
  s.p = w.p;
  s.q = w.q;
  s.coupling = mu;
  s.grid_size = grid_size;
  const auto g = static_cast<std::size_t>(grid_size);
  s.phase_grid.reserve(g * g);
  s.eigenvalues_by_phase.reserve(g * g);
  s.eigenvalues.reserve(g * g * static_cast<std::size_t>(q));
  s.band_min.assign(static_cast<std::size_t>(q), std::numeric_limits<Scalar>::infinity());
  s.band_max.assign(static_cast<std::size_t>(q), -std::numeric_limits<Scalar>::infinity());

  const Scalar two_pi = Scalar(2) * Scalar(EIGEN_PI);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver;
  for (int k1 = 0; k1 < grid_size; ++k1) {
    const Scalar theta1 = two_pi * static_cast<Scalar>(k1) / static_cast<Scalar>(grid_size);
    const std::complex<Scalar> z1 = std::polar(Scalar(1), theta1);
    for (int k2 = 0; k2 < grid_size; ++k2) {
      const Scalar theta2 = two_pi * static_cast<Scalar>(k2) / static_cast<Scalar>(grid_size);
      const std::complex<Scalar> z2 = std::polar(Scalar(1), theta2);
      const ComplexMatrix<Scalar> a = z1 * w.u + (mu * z2) * w.v;
      const ComplexMatrix<Scalar> h = a + a.adjoint();
      solver.compute(h, Eigen::EigenvaluesOnly);
      require(solver.info() == Eigen::Success, errc::numerical_failure,
              "Hermitian eigenvalue solve did not converge");
      s.phase_grid.emplace_back(theta1, theta2);
      std::vector<Scalar> evals(static_cast<std::size_t>(q));
      for (std::int64_t b = 0; b < q; ++b) {
        const Scalar e = solver.eigenvalues()(static_cast<Eigen::Index>(b));
        evals[static_cast<std::size_t>(b)] = e;
        auto& lo = s.band_min[static_cast<std::size_t>(b)];
        auto& hi = s.band_max[static_cast<std::size_t>(b)];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        s.eigenvalues.push_back(e);
      }
      s.eigenvalues_by_phase.push_back(std::move(evals));
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

// (# eigenvalues <= E) / (total count): the normalized counting function.
template <typename Scalar>
Scalar integrated_density_of_states(const SpectrumSample<Scalar>& s, Scalar E) {
  const auto count =
      std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), E) - s.eigenvalues.begin();
  return static_cast<Scalar>(count) / static_cast<Scalar>(s.eigenvalues.size());
}

// Every gap between consecutive band hulls of width >= min_gap_width,
// annotated with its IDS and the recovered trace-range label (m, n).
// A band gap is an interval free of eigenvalues at *every* phase, so spurious
// sampling voids inside a band (or at band touching points) are never
// reported. nmax <= 0 defaults to q.
template <typename Scalar>
std::vector<GapLabel<Scalar>> gap_labels(const SpectrumSample<Scalar>& s,
                                         Scalar min_gap_width = Scalar(0.05),
                                         std::int64_t nmax = 0, Scalar tol = Scalar(1e-3)) {
  require(min_gap_width > Scalar(0), errc::invalid_parameter, "min_gap_width must be > 0");
  if (nmax <= 0) nmax = s.q;
  const auto lambda = RotationParameter<Scalar>::from_fraction(s.p, s.q);
  std::vector<GapLabel<Scalar>> labels;
  for (std::int64_t b = 0; b + 1 < s.q; ++b) {
    const Scalar lo = s.band_max[static_cast<std::size_t>(b)];
    const Scalar hi = s.band_min[static_cast<std::size_t>(b) + 1];
    if (!(lo < hi) || hi - lo < min_gap_width) continue;
    GapLabel<Scalar> gl;
    gl.energy_lo = lo;
    gl.energy_hi = hi;
    gl.width = hi - lo;
    gl.ids = integrated_density_of_states(s, (lo + hi) / Scalar(2));
    gl.k0 = k0_from_trace(gl.ids, lambda, nmax, tol);
    gl.residual = std::abs(gl.ids - gl.k0.pairing());
    labels.push_back(gl);
  }
  return labels;
}

// One spectrum sweep per reduced fraction p/q with 1 <= q <= qmax and
// 0 <= p < q, ordered by (q, p).
template <typename Scalar>
std::vector<SpectrumSample<Scalar>> butterfly_dataset(int qmax, Scalar mu, int grid_size) {
  require(qmax >= 1, errc::invalid_parameter, "qmax must be >= 1");
  std::vector<SpectrumSample<Scalar>> samples;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    for (std::int64_t p = 0; p < q; ++p) {
      if (detail::gcd64(p == 0 ? q : p, q) != 1) continue;
      samples.push_back(spectrum_sweep(p, q, mu, grid_size));
    }
  }
  return samples;
}

}  // namespace nct
