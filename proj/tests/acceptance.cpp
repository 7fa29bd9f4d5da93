// Acceptance gate: one timed pass/fail line per shipping criterion.
// Usage: acceptance <path-to-nctorus-binary>
// Exit code 0 iff every criterion passes, including its runtime budget.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nct/nct.hpp>

using namespace nct;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Element<double> random_element(std::mt19937_64& rng, const RotationParameter<double>& lam) {
  std::uniform_int_distribution<int> nterms(1, 8);
  std::uniform_int_distribution<std::int64_t> deg(-4, 4);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  Element<double> a(lam);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    double re = 0, im = 0;
    do {
      re = box(rng);
      im = box(rng);
    } while (re * re + im * im > 1.0);
    a.accumulate(deg(rng), deg(rng), {re, im});
  }
  return a;
}

// ---------------------------------------------------------------------------
// criterion 1: algebra axioms on random triples
bool c1_algebra(std::string& why) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  std::vector<RotationParameter<double>> lams;
  for (int i = 0; i < 10; ++i) lams.push_back(RotationParameter<double>::from_value(unif(rng)));

  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& lam = lams[static_cast<std::size_t>(rng() % 10)];
    const Element<double> a = random_element(rng, lam);
    const Element<double> b = random_element(rng, lam);
    const Element<double> c = random_element(rng, lam);
    const double la = l1_norm(a), lb = l1_norm(b), lc = l1_norm(c);

    const double assoc = l1_norm((a * b) * c - a * (b * c)) / (1.0 + la * lb * lc);
    const double invol = l1_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) / (1.0 + la * lb);
    const double trcomm = std::abs(trace(a * b) - trace(b * a)) / (1.0 + la * lb);

    double sumsq = 0.0;
    for (const auto& [key, coef] : a.coefficients()) sumsq += std::norm(coef);
    const double positivity =
        std::abs(trace(adjoint(a) * a) - std::complex<double>(sumsq, 0.0)) / (1.0 + sumsq);

    worst = std::max({worst, assoc, invol, trcomm, positivity});
  }
  if (worst > 1e-12) {
    why = "max normalized axiom defect " + std::to_string(worst) + " exceeds 1e-12";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 2: Weyl relation and matrix trace for every reduced p/q, q <= 30
bool c2_weyl(std::string& why) {
  double worst_weyl = 0.0;
  double worst_trace = 0.0;
  for (std::int64_t q = 1; q <= 30; ++q) {
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p == 0 ? q : p, q) != 1) continue;
      const WeylPair<double> w = weyl_pair_rational<double>(p, q);
      const std::complex<double> phase = unit_phase<double>(1, w.lambda);
      const double defect = (w.u * w.v - phase * (w.v * w.u)).cwiseAbs().maxCoeff();
      worst_weyl = std::max(worst_weyl, defect);

      for (std::int64_t m = -(q - 1); m <= q - 1; ++m) {
        for (std::int64_t n = -(q - 1); n <= q - 1; ++n) {
          const Element<double> mono = monomial<double>(m, n, {1.0, 0.0}, w.lambda);
          const std::complex<double> mtr = represent(mono, w).trace() / double(q);
          const std::complex<double> expect = trace(mono);
          worst_trace = std::max(worst_trace, std::abs(mtr - expect));
        }
      }
    }
  }
  if (worst_weyl > 1e-14) {
    why = "max entrywise Weyl defect " + std::to_string(worst_weyl) + " exceeds 1e-14";
    return false;
  }
  if (worst_trace > 1e-13) {
    why = "max matrix-vs-algebra trace defect " + std::to_string(worst_trace) + " exceeds 1e-13";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 3: no finite-dimensional pair satisfies the twisted relation
bool c3_obstruction(std::string& why) {
  std::mt19937_64 rng(303);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 50);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = dim(rng);
    ComplexMatrix<double> P(d, d), Q(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        P(i, j) = {gauss(rng), gauss(rng)};
        Q(i, j) = {gauss(rng), gauss(rng)};
      }
    }
    worst = std::max(worst, commutator_trace_check(P, Q));
  }
  if (worst > 1e-12) {
    why = "max normalized commutator trace " + std::to_string(worst) + " exceeds 1e-12";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 4: Rieffel projection quality and its ordered-pair label
bool c4_rieffel(std::string& why) {
  for (const double lv : {0.6180339887, 0.4142135624, 0.3183098862}) {
    const auto lam = RotationParameter<double>::from_value(lv);
    const RieffelProjection<double> rp = build_rieffel_projection(lam, 0.05, 256);
    if (rp.selfadjointness_defect > 1e-9) {
      why = "self-adjointness defect " + std::to_string(rp.selfadjointness_defect) +
            " exceeds 1e-9 at lambda=" + std::to_string(lv);
      return false;
    }
    if (rp.idempotency_defect > 1e-3) {
      why = "idempotency defect " + std::to_string(rp.idempotency_defect) +
            " exceeds 1e-3 at lambda=" + std::to_string(lv);
      return false;
    }
    const double terr = std::abs(rp.trace_value - std::complex<double>(lv, 0.0));
    if (terr > 1e-9) {
      why = "trace error " + std::to_string(terr) + " exceeds 1e-9 at lambda=" + std::to_string(lv);
      return false;
    }
    const K0Class<double> k0 = k0_from_trace(rp.trace_value.real(), lam, 10, 1e-6);
    if (k0.m != 0 || k0.n != 1) {
      why = "label (" + std::to_string(k0.m) + "," + std::to_string(k0.n) +
            ") != (0,1) at lambda=" + std::to_string(lv);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 5: trace range, exact rational case and golden density
bool c5_trace_range(std::string& why) {
  const auto quarter = trace_range_sample(RotationParameter<double>::from_fraction(1, 4), 10, 10);
  const std::vector<double> expect{0.0, 0.25, 0.5, 0.75, 1.0};
  if (quarter != expect) {
    why = "lambda=1/4 range has " + std::to_string(quarter.size()) + " values, not the exact five";
    return false;
  }
  const auto golden =
      trace_range_sample(RotationParameter<double>::from_value(0.6180339887498949), 50, 50);
  double maxgap = 0.0;
  for (std::size_t i = 0; i + 1 < golden.size(); ++i) {
    maxgap = std::max(maxgap, golden[i + 1] - golden[i]);
  }
  if (maxgap >= 0.02) {
    why = "golden max consecutive gap " + std::to_string(maxgap) + " is not below 0.02";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 6: every wide spectral gap carries an admissible density label
bool c6_gap_labels(std::string& why) {
  for (std::int64_t q = 1; q <= 20; ++q) {
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p == 0 ? q : p, q) != 1) continue;
      const auto s = spectrum_sweep<double>(p, q, 1.0, 32);
      std::vector<GapLabel<double>> labels;
      try {
        labels = gap_labels(s, 0.05, q, 1e-3);
      } catch (const Error& e) {
        why = "labeling failed for " + std::to_string(p) + "/" + std::to_string(q) + ": " + e.what();
        return false;
      }
      for (const auto& gl : labels) {
        const double predicted = double(gl.k0.m) + double(gl.k0.n) * (double(p) / double(q));
        if (std::abs(gl.ids - predicted) > 1e-3) {
          why = "gap at " + std::to_string(p) + "/" + std::to_string(q) + " has IDS " +
                std::to_string(gl.ids) + " vs label value " + std::to_string(predicted);
          return false;
        }
        if (std::abs(gl.k0.n) > q) {
          why = "gap label at " + std::to_string(p) + "/" + std::to_string(q) +
                " uses |n| > q: n=" + std::to_string(gl.k0.n);
          return false;
        }
      }
      if (p == 1 && q == 3) {
        if (labels.size() != 2 || labels[0].ids != 1.0 / 3.0 || labels[1].ids != 2.0 / 3.0) {
          why = "flux 1/3 labels are not exactly {1/3, 2/3}";
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 7: continued-fraction orbit comparison
bool c7_morita(std::string& why) {
  const double golden = 0.6180339887;
  if (!morita_equivalent(golden, 1.0 / (1.0 + golden), 40).equivalent) {
    why = "golden and 1/(1+golden) not reported equivalent";
    return false;
  }
  if (morita_equivalent(golden, 0.4142135624, 40).equivalent) {
    why = "golden and sqrt(2)-1 wrongly reported equivalent";
    return false;
  }

  // random integer fractional-linear images of quadratic surds with small
  // periodic quotients; each image must land in the same orbit as its source
  std::mt19937_64 rng(7001);
  int done = 0;
  int attempts = 0;
  while (done < 20 && attempts < 2000) {
    ++attempts;
    std::array<int, 8> pat{};
    int twos = 0;
    for (auto& t : pat) {
      const bool two = (rng() % 4 == 0) && twos < 2;
      t = two ? 2 : 1;
      twos += two ? 1 : 0;
    }
    double y = 1.0;
    for (int sweep = 0; sweep < 60; ++sweep) {
      for (int k = 7; k >= 0; --k) y = 1.0 / (double(pat[static_cast<std::size_t>(k)]) + y);
    }
    const double lam = y;

    // word of 1..3 generators: shears and the inversion swap
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    const int nf = 1 + int(rng() % 3);
    for (int f = 0; f < nf; ++f) {
      std::int64_t fa = 1, fb = 0, fc = 0, fd = 1;
      switch (rng() % 3) {
        case 0: {  // upper shear
          const std::int64_t k = std::int64_t(rng() % 4) - 2;
          fb = k == 0 ? 1 : k;
          break;
        }
        case 1: {  // lower shear
          const std::int64_t k = std::int64_t(rng() % 4) - 2;
          fc = k == 0 ? 1 : k;
          break;
        }
        default: {  // swap
          fa = 0;
          fb = 1;
          fc = 1;
          fd = 0;
          break;
        }
      }
      const std::int64_t na = fa * a + fb * c, nb = fa * b + fb * d;
      const std::int64_t nc = fc * a + fd * c, nd = fc * b + fd * d;
      a = na;
      b = nb;
      c = nc;
      d = nd;
    }
    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
    const double denom = double(c) * lam + double(d);
    if (std::abs(denom) < 1e-6) continue;
    double mu = (double(a) * lam + double(b)) / denom;
    mu -= std::floor(mu);
    if (mu < 1e-6 || mu > 1.0 - 1e-6) continue;
    if (std::abs(mu - lam) < 1e-6) continue;

    if (!morita_equivalent(lam, mu, 40).equivalent) {
      why = "image " + std::to_string(mu) + " of " + std::to_string(lam) +
            " not recognized as equivalent (word length " + std::to_string(nf) + ")";
      return false;
    }
    ++done;
  }
  if (done < 20) {
    why = "could not assemble 20 admissible random images";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 8: circle dynamics
bool c8_dynamics(std::string& why) {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> unif(0.01, 0.99);
  std::uniform_int_distribution<std::int64_t> len(2, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lam = RotationParameter<double>::from_value(unif(rng));
    const auto gaps = three_gap_stats(orbit(0.0, lam, len(rng)));
    if (gaps.empty() || gaps.size() > 3) {
      why = "orbit produced " + std::to_string(gaps.size()) + " distinct gaps";
      return false;
    }
  }

  const auto golden = RotationParameter<double>::from_value(0.6180339887498949);
  const double dstar = discrepancy(orbit(0.0, golden, 1000));
  if (dstar >= 0.01) {
    why = "golden discrepancy at N=1000 is " + std::to_string(dstar);
    return false;
  }

  for (std::int64_t q = 1; q <= 50; ++q) {
    const std::int64_t p = q == 1 ? 0 : q - 1;
    const auto lt = leaf_trace(RotationParameter<double>::from_fraction(p, q), 0.25, 600);
    if (!lt.closed || !lt.period || *lt.period != q) {
      why = "rational leaf " + std::to_string(p) + "/" + std::to_string(q) +
            " did not close at period q";
      return false;
    }
  }

  const double proxies[10] = {std::sqrt(2.0) - 1.0, std::sqrt(3.0) - 1.0, std::sqrt(5.0) - 2.0,
                              std::sqrt(7.0) - 2.0, std::sqrt(11.0) - 3.0, 0.14159265358979312,
                              0.71828182845904509, 0.69314718055994531, 0.31830988618379069,
                              0.36787944117144233};
  for (const double x : proxies) {
    const auto lt = leaf_trace(RotationParameter<double>::from_value(x), 0.25, 500);
    if (lt.closed) {
      why = "irrational-proxy leaf at " + std::to_string(x) + " closed within 500 wraps";
      return false;
    }
  }

  const double measure = transverse_measure_estimate(golden, {0.0, 0.5}, 0.1, 10000);
  if (std::abs(measure - 0.5) > 0.01) {
    why = "transverse measure of (0, 1/2) came out " + std::to_string(measure);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 9: CLI determinism of the butterfly dataset
bool c9_determinism(std::string& why) {
  const std::string base =
      "\"" + g_cli_path + "\" butterfly --qmax 10 --mu 1 --grid 16 --out ";
  if (std::system((base + "acceptance_bfly_1.csv > /dev/null").c_str()) != 0 ||
      std::system((base + "acceptance_bfly_2.csv > /dev/null").c_str()) != 0) {
    why = "butterfly invocation failed";
    return false;
  }
  const std::string first = slurp("acceptance_bfly_1.csv");
  const std::string second = slurp("acceptance_bfly_2.csv");
  if (first.empty()) {
    why = "butterfly produced an empty file";
    return false;
  }
  if (first != second) {
    why = "repeated runs differ";
    return false;
  }
  return true;
}

struct CriterionSpec {
  int id;
  const char* name;
  double budget_s;  // <= 0: no runtime budget
  bool (*run)(std::string&);
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-nctorus>\n");
    return 1;
  }
  g_cli_path = argv[1];

  const CriterionSpec specs[] = {
      {1, "algebra axioms", 5.0, c1_algebra},
      {2, "rational Weyl pairs", 5.0, c2_weyl},
      {3, "finite-dimensional obstruction", 0.0, c3_obstruction},
      {4, "Rieffel projection", 30.0, c4_rieffel},
      {5, "trace range", 0.0, c5_trace_range},
      {6, "gap labeling", 60.0, c6_gap_labels},
      {7, "Morita orbits", 1.0, c7_morita},
      {8, "circle dynamics", 10.0, c8_dynamics},
      {9, "CLI determinism", 0.0, c9_determinism},
  };

  bool all_pass = true;
  for (const auto& spec : specs) {
    std::string why;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = spec.run(why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("unexpected exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && spec.budget_s > 0.0 && dt > spec.budget_s) {
      ok = false;
      why = "runtime " + std::to_string(dt) + " s exceeds budget of " +
            std::to_string(spec.budget_s) + " s";
    }
    std::printf("criterion %d (%s): %s (%.2f s)\n", spec.id, spec.name, ok ? "PASS" : "FAIL", dt);
    if (!ok && !why.empty()) std::printf("    %s\n", why.c_str());
    all_pass = all_pass && ok;
  }
  return all_pass ? 0 : 1;
}
