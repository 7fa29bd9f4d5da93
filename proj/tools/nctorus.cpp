// nctorus: command-line front end for the noncommutative torus toolkit.
//
// Subcommands
//   verify-axioms  randomized property suite for the twisted algebra
//   rieffel        build a Rieffel projection, report defects and trace (JSON)
//   trace-range    sample of the trace range {m + n*lambda} in [0,1]
//   k0             invert a trace value to its K0 label (m,n)
//   canon          canonical parameter min({x}, 1-{x})
//   morita         continued-fraction tail comparison of two parameters (JSON)
//   orbit          rotation orbit: points, discrepancy, gap statistics (JSON)
//   leaf           trace a leaf of the slope-lambda torus flow (JSON)
//   butterfly      Hofstadter butterfly eigenvalue dataset (CSV file)
//   gaps           spectral gap labels for one rational parameter (JSON)
//
// Exit codes: 0 success, 1 domain error ("error:" on stderr), 2 usage error.
// All floating-point output uses 17 significant digits in plain and CSV
// formats; JSON uses shortest-round-trip encoding. Identical argv produces
// byte-identical output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <nct/nct.hpp>

namespace {

using json = nlohmann::json;
using Elem = nct::Element<double>;
using Rot = nct::RotationParameter<double>;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- verify-axioms ----------------------------------------------------------

Elem random_element(std::mt19937_64& rng, const Rot& lambda) {
  std::uniform_int_distribution<int> nterms(1, 8);
  std::uniform_int_distribution<std::int64_t> deg(-4, 4);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Elem a(lambda);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    const std::int64_t m = deg(rng);
    const std::int64_t n = deg(rng);
    double re = unit(rng), im = unit(rng);
    while (re * re + im * im > 1.0) {
      re = unit(rng);
      im = unit(rng);
    }
    a.accumulate(m, n, {re, im});
  }
  return a;
}

int run_verify_axioms(int trials) {
  nct::require(trials >= 1, nct::errc::invalid_parameter, "trials must be >= 1");
  std::mt19937_64 rng(20260819u);
  std::uniform_real_distribution<double> unit01(0.0, 1.0);
  std::vector<Rot> lambdas;
  for (int i = 0; i < 10; ++i) lambdas.push_back(Rot::from_value(unit01(rng)));

  double d_assoc = 0, d_invol = 0, d_trace = 0, d_positive = 0;
  for (int t = 0; t < trials; ++t) {
    const Rot& lam = lambdas[static_cast<std::size_t>(t) % lambdas.size()];
    const Elem a = random_element(rng, lam);
    const Elem b = random_element(rng, lam);
    const Elem c = random_element(rng, lam);
    const double scale = 1.0 + nct::l1_norm(a) * nct::l1_norm(b) * (1.0 + nct::l1_norm(c));

    const Elem ab = nct::multiply(a, b);
    d_assoc = std::max(d_assoc,
                       nct::l1_norm(nct::multiply(ab, c) - nct::multiply(a, nct::multiply(b, c))) / scale);
    d_invol = std::max(d_invol,
                       nct::l1_norm(nct::adjoint(ab) - nct::multiply(nct::adjoint(b), nct::adjoint(a))) / scale);
    d_trace = std::max(d_trace, std::abs(nct::trace(ab) - nct::trace(nct::multiply(b, a))) / scale);

    double sumsq = 0;
    for (const auto& [key, coeff] : a.coefficients()) sumsq += std::norm(coeff);
    d_positive = std::max(d_positive,
                          std::abs(nct::trace(nct::multiply(nct::adjoint(a), a)).real() - sumsq) /
                              (1.0 + sumsq));
  }

  const double tol = 1e-12;
  struct Row {
    const char* name;
    double defect;
  } rows[] = {{"associativity", d_assoc},
              {"involution-antimultiplicative", d_invol},
              {"trace-commutativity", d_trace},
              {"trace-positivity", d_positive}};
  bool ok = true;
  std::printf("property                          max defect      verdict (%d trials, tol %.0e)\n",
              trials, tol);
  for (const Row& r : rows) {
    const bool pass = r.defect <= tol;
    ok = ok && pass;
    std::printf("%-32s  %-14.3e  %s\n", r.name, r.defect, pass ? "PASS" : "FAIL");
  }
  if (!ok) {
    std::fprintf(stderr, "error: algebra axiom defect exceeds tolerance\n");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncommutative torus toolkit"};
  app.require_subcommand(1);

  // verify-axioms
  auto* sc_verify = app.add_subcommand("verify-axioms", "randomized algebra property suite");
  int trials = 50;
  sc_verify->add_option("--trials", trials, "number of random triples");

  // rieffel
  auto* sc_rieffel = app.add_subcommand("rieffel", "build a Rieffel projection");
  std::string r_lambda;
  double r_eps = 0.05;
  int r_trunc = 256;
  sc_rieffel->add_option("--lambda", r_lambda, "rotation parameter (decimal)")->required();
  sc_rieffel->add_option("--eps", r_eps, "ramp width");
  sc_rieffel->add_option("--trunc", r_trunc, "Fourier truncation order");

  // trace-range
  auto* sc_trange = app.add_subcommand("trace-range", "sample of (K0 trace range) in [0,1]");
  std::string t_lambda;
  std::int64_t t_mmax = 10, t_nmax = 10;
  sc_trange->add_option("--lambda", t_lambda, "rotation parameter (decimal or p/q)")->required();
  sc_trange->add_option("--mmax", t_mmax, "max |m|");
  sc_trange->add_option("--nmax", t_nmax, "max |n|");

  // k0
  auto* sc_k0 = app.add_subcommand("k0", "recover (m,n) from a trace value");
  std::string k_lambda;
  double k_tau = 0, k_tol = 1e-6;
  std::int64_t k_nmax = 10;
  sc_k0->add_option("--lambda", k_lambda, "rotation parameter (decimal or p/q)")->required();
  sc_k0->add_option("--tau", k_tau, "trace value")->required();
  sc_k0->add_option("--nmax", k_nmax, "max |n|");
  sc_k0->add_option("--tol", k_tol, "matching tolerance");

  // canon
  auto* sc_canon = app.add_subcommand("canon", "canonical parameter min({x}, 1-{x})");
  double c_x = 0;
  sc_canon->add_option("--x", c_x, "real parameter")->required();

  // morita
  auto* sc_morita = app.add_subcommand("morita", "continued-fraction tail equivalence");
  std::string m_lambda, m_mu;
  int m_depth = 40;
  sc_morita->add_option("--lambda", m_lambda, "first parameter (decimal)")->required();
  sc_morita->add_option("--mu", m_mu, "second parameter (decimal)")->required();
  sc_morita->add_option("--depth", m_depth, "continued-fraction depth");

  // orbit
  auto* sc_orbit = app.add_subcommand("orbit", "rotation orbit statistics");
  std::string o_lambda;
  double o_theta0 = 0;
  std::int64_t o_n = 100;
  sc_orbit->add_option("--lambda", o_lambda, "rotation parameter (decimal or p/q)")->required();
  sc_orbit->add_option("--theta0", o_theta0, "initial point in [0,1)");
  sc_orbit->add_option("--n", o_n, "number of points");

  // leaf
  auto* sc_leaf = app.add_subcommand("leaf", "trace a leaf of the torus flow");
  std::string l_lambda;
  double l_t0 = 0, l_tol = 1e-9;
  std::int64_t l_wraps = 100;
  sc_leaf->add_option("--lambda", l_lambda, "slope (decimal or p/q)")->required();
  sc_leaf->add_option("--t0", l_t0, "starting height in [0,1)");
  sc_leaf->add_option("--wraps", l_wraps, "maximum chart crossings");
  sc_leaf->add_option("--tol", l_tol, "closure tolerance");

  // butterfly
  auto* sc_butterfly = app.add_subcommand("butterfly", "Hofstadter butterfly CSV dataset");
  int b_qmax = 10, b_grid = 16;
  double b_mu = 1.0;
  std::string b_out = "butterfly.csv";
  sc_butterfly->add_option("--qmax", b_qmax, "max denominator");
  sc_butterfly->add_option("--mu", b_mu, "coupling");
  sc_butterfly->add_option("--grid", b_grid, "Bloch grid size per axis");
  sc_butterfly->add_option("--out", b_out, "output CSV path");

  // gaps
  auto* sc_gaps = app.add_subcommand("gaps", "spectral gap labels at lambda = p/q");
  std::int64_t g_p = 1, g_q = 3;
  double g_mu = 1.0, g_minwidth = 0.05, g_tol = 1e-3;
  int g_grid = 32;
  std::int64_t g_nmax = 0;
  sc_gaps->add_option("--p", g_p, "numerator")->required();
  sc_gaps->add_option("--q", g_q, "denominator")->required();
  sc_gaps->add_option("--mu", g_mu, "coupling");
  sc_gaps->add_option("--grid", g_grid, "Bloch grid size per axis");
  sc_gaps->add_option("--min-width", g_minwidth, "minimum gap width");
  sc_gaps->add_option("--nmax", g_nmax, "max |n| for labels (0: use q)");
  sc_gaps->add_option("--tol", g_tol, "label matching tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (app.got_subcommand(sc_verify)) {
      return run_verify_axioms(trials);
    }

    if (app.got_subcommand(sc_rieffel)) {
      const Rot lam = nct::parse_rotation<double>(r_lambda);
      const auto rp = nct::build_rieffel_projection(lam, r_eps, r_trunc);
      json j;
      j["lambda"] = lam.value();
      j["eps"] = r_eps;
      j["fourier_order"] = r_trunc;
      j["idempotency_defect"] = rp.idempotency_defect;
      j["selfadjointness_defect"] = rp.selfadjointness_defect;
      j["trace_re"] = rp.trace_value.real();
      j["trace_im"] = rp.trace_value.imag();
      j["trace_error"] = std::abs(rp.trace_value.real() - lam.value());
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (app.got_subcommand(sc_trange)) {
      const Rot lam = nct::parse_rotation<double>(t_lambda);
      for (const double v : nct::trace_range_sample(lam, t_mmax, t_nmax)) {
        std::printf("%s\n", fmt17(v).c_str());
      }
      return 0;
    }

    if (app.got_subcommand(sc_k0)) {
      const Rot lam = nct::parse_rotation<double>(k_lambda);
      const auto cls = nct::k0_from_trace(k_tau, lam, k_nmax, k_tol);
      std::printf("(%lld,%lld)\n", static_cast<long long>(cls.m), static_cast<long long>(cls.n));
      return 0;
    }

    if (app.got_subcommand(sc_canon)) {
      std::printf("%s\n", fmt17(nct::canonical_parameter(c_x)).c_str());
      return 0;
    }

    if (app.got_subcommand(sc_morita)) {
      const double lv = nct::parse_rotation<double>(m_lambda).value();
      const double mv = nct::parse_rotation<double>(m_mu).value();
      const auto res = nct::morita_equivalent(lv, mv, m_depth);
      json j;
      j["lambda"] = lv;
      j["mu"] = mv;
      j["depth"] = res.depth;
      j["window"] = res.window;
      j["discard"] = res.discard;
      j["equivalent"] = res.equivalent;
      if (res.witness) {
        j["witness"] = json::array({res.witness->first, res.witness->second});
      } else {
        j["witness"] = nullptr;
      }
      j["cf_lambda"] = res.cf_lambda;
      j["cf_mu"] = res.cf_mu;
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (app.got_subcommand(sc_orbit)) {
      const Rot lam = nct::parse_rotation<double>(o_lambda);
      const auto orb = nct::orbit(o_theta0, lam, o_n);
      json j;
      j["lambda"] = lam.value();
      j["theta0"] = o_theta0;
      j["n"] = o_n;
      j["points"] = orb.points;
      j["discrepancy"] = nct::discrepancy(orb);
      try {
        j["gap_lengths"] = nct::three_gap_stats(orb);
      } catch (const nct::Error& e) {
        if (e.code() != nct::errc::degenerate_input) throw;
        j["gap_lengths"] = nullptr;  // duplicate points: gaps undefined
      }
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (app.got_subcommand(sc_leaf)) {
      const Rot lam = nct::parse_rotation<double>(l_lambda);
      const auto leaf = nct::leaf_trace(lam, l_t0, l_wraps, l_tol);
      json j;
      j["lambda"] = lam.value();
      j["t0"] = l_t0;
      j["max_wraps"] = l_wraps;
      j["closed"] = leaf.closed;
      if (leaf.period) {
        j["period"] = *leaf.period;
      } else {
        j["period"] = nullptr;
      }
      j["min_return_distance"] = leaf.min_return_distance;
      std::vector<double> heights;
      heights.reserve(leaf.segments.size());
      for (const auto& s : leaf.segments) heights.push_back(s.y0);
      j["heights"] = heights;
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (app.got_subcommand(sc_butterfly)) {
      const auto samples = nct::butterfly_dataset(b_qmax, b_mu, b_grid);
      std::string csv = "p,q,lambda,theta1,theta2,band_index,energy\n";
      std::size_t rows = 0;
      for (const auto& s : samples) {
        const std::string head = std::to_string(s.p) + "," + std::to_string(s.q) + "," +
                                 fmt17(static_cast<double>(s.p) / static_cast<double>(s.q));
        for (std::size_t i = 0; i < s.phase_grid.size(); ++i) {
          const std::string phases =
              "," + fmt17(s.phase_grid[i].first) + "," + fmt17(s.phase_grid[i].second) + ",";
          for (std::int64_t b = 0; b < s.q; ++b) {
            csv += head + phases + std::to_string(b) + "," +
                   fmt17(s.eigenvalues_by_phase[i][static_cast<std::size_t>(b)]) + "\n";
            ++rows;
          }
        }
      }
      std::ofstream out(b_out, std::ios::binary);
      nct::require(static_cast<bool>(out), nct::errc::invalid_parameter,
                   "cannot open output file: " + b_out);
      out << csv;
      out.close();
      nct::require(static_cast<bool>(out), nct::errc::numerical_failure,
                   "write failed: " + b_out);
      std::printf("wrote %s (%zu rows)\n", b_out.c_str(), rows);
      return 0;
    }

    if (app.got_subcommand(sc_gaps)) {
      const auto sample = nct::spectrum_sweep<double>(g_p, g_q, g_mu, g_grid);
      const auto labels = nct::gap_labels(sample, g_minwidth, g_nmax, g_tol);
      json arr = json::array();
      for (const auto& gl : labels) {
        json j;
        j["energy_lo"] = gl.energy_lo;
        j["energy_hi"] = gl.energy_hi;
        j["width"] = gl.width;
        j["ids"] = gl.ids;
        j["m"] = gl.k0.m;
        j["n"] = gl.k0.n;
        j["residual"] = gl.residual;
        arr.push_back(j);
      }
      std::printf("%s\n", arr.dump(2).c_str());
      return 0;
    }
  } catch (const nct::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;  // unreachable: require_subcommand(1) guarantees a dispatch
}
