// mollab: desk-scale laboratory for mollified central-value moments of
// Dirichlet L-functions.  Subcommands:
//
//   census        weighted non-vanishing census over the modulus window
//   moments       mollified first/second moments with predictions
//   optimize      shape-polynomial optimization and the eta-side constants
//   kernel-table  dump the smoothing kernel Z(x) on a grid
//   expsum-bench  quintuple-sum diagnostic ratio sweeps
//   selftest      invariant battery, one line per suite
//
// Exit codes: 0 success, 1 failed test or inequality, 2 invalid
// configuration (including constraint violations without --force).

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mollab/cache.hpp"
#include "mollab/errors.hpp"
#include "mollab/expsums.hpp"
#include "mollab/lvalue.hpp"
#include "mollab/moments.hpp"
#include "mollab/optimizer.hpp"
#include "mollab/report.hpp"
#include "mollab/runconfig.hpp"

namespace fs = std::filesystem;
using namespace mollab;

namespace {

std::string out_path(const RunConfig& rc, const std::string& name) {
  fs::create_directories(rc.out_dir);
  return (fs::path(rc.out_dir) / name).string();
}

void write_json(const RunConfig& rc, const std::string& name, const nlohmann::json& j) {
  write_text_atomic(out_path(rc, name), j.dump(2) + "\n");
}

// Shared by census and moments: refuse on constraint violations unless
// forced, run the sweep, hand the rows and report to the caller.
struct SweepOutput {
  std::vector<ModulusRow> rows;
  MomentReport report;
  MollifierSpec spec;
  size_t cache_entries = 0;
};

int run_sweep(const RunConfig& rc, SweepOutput& out) {
  std::vector<std::string> violations = config_violations(rc);
  if (!violations.empty()) {
    for (const std::string& v : violations) std::cerr << "constraint violated: " << v << "\n";
    if (!rc.force) {
      std::cerr << "refusing to run; pass --force to run anyway\n";
      return 2;
    }
    std::cerr << "running anyway (--force): the run's claims are outside the proven range\n";
  }
  MollifierSpec spec = make_spec(rc);
  ModulusSet ms = build_modulus_set(rc.weight);
  std::unique_ptr<FileCache> cache;
  if (!rc.cache_path.empty()) cache = std::make_unique<FileCache>(rc.cache_path);
  int threads = resolve_threads(rc.threads);
  out.rows = modulus_rows(ms, &spec, rc.tau_nv, threads, cache.get());
  out.report = report_from_rows(out.rows, &spec, rc.tau_nv);
  out.spec = spec;
  if (cache) {
    out.cache_entries = cache->size();
    cache->flush();
  }
  return 0;
}

int cmd_census(const RunConfig& rc) {
  SweepOutput sw{{}, {}, make_spec(rc)};
  if (int rcode = run_sweep(rc, sw)) return rcode;
  std::string table = rc.format == "json" ? "census.json" : "census.csv";
  if (rc.format == "json")
    write_json(rc, table, census_rows_json(sw.rows));
  else
    write_text_atomic(out_path(rc, table), census_csv(sw.rows));
  write_json(rc, "summary.json", summary_json(sw.report, rc.weight, sw.spec,
                                              rc.weight.eps_split));
  const CensusReport& c = sw.report.census;
  std::cout << "census: " << sw.rows.size() << " moduli"
            << (sw.rows.empty() ? " (empty window)" : "") << ", even nonvanishing "
            << fmt17(c.even_nonvanishing) << " / " << fmt17(c.even_mass) << ", cs bound "
            << fmt17(sw.report.cs_bound) << "; wrote " << table << ", summary.json in "
            << rc.out_dir << "\n";
  return 0;
}

int cmd_moments(const RunConfig& rc) {
  SweepOutput sw{{}, {}, make_spec(rc)};
  if (int rcode = run_sweep(rc, sw)) return rcode;
  std::string table = rc.format == "json" ? "moments_rows.json" : "moments.csv";
  if (rc.format == "json")
    write_json(rc, table, moments_rows_json(sw.rows));
  else
    write_text_atomic(out_path(rc, table), moments_csv(sw.rows));
  write_json(rc, "moments.json", moments_json(sw.report, rc.weight, sw.spec));
  std::cout << "moments: s1 = " << fmt17(sw.report.s1.real()) << " (im "
            << fmt17(sw.report.s1.imag()) << "), s2 = " << fmt17(sw.report.s2)
            << ", s1/pred = "
            << (sw.report.s1_predicted != 0.0
                    ? fmt17(sw.report.s1.real() / sw.report.s1_predicted)
                    : std::string("n/a"))
            << ", s2/pred = "
            << (sw.report.s2_predicted != 0.0 ? fmt17(sw.report.s2 / sw.report.s2_predicted)
                                              : std::string("n/a"))
            << "; wrote " << table << ", moments.json in " << rc.out_dir << "\n";
  return 0;
}

int cmd_optimize(const RunConfig& rc) {
  OptimizeResult res = optimize(rc.degree, rc.theta1, rc.theta2);
  nlohmann::json j =
      optimize_json(res, rc.degree, rc.theta1, rc.theta2, rc.weight.eta1, rc.weight.eta2);
  write_json(rc, "optimize.json", j);
  for (const auto& w : j["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
  std::cout << "optimize: degree " << rc.degree << ", ratio " << fmt17(to_double(res.ratio))
            << " (exact " << res.ratio.str() << "), sandwich "
            << fmt17(sandwich_value(rc.theta1, rc.theta2)) << "; wrote optimize.json in "
            << rc.out_dir << "\n";
  return 0;
}

int cmd_kernel_table(const RunConfig& rc) {
  if (!(rc.xmin > 0.0) || !(rc.xmax > rc.xmin) || rc.points < 2)
    throw std::invalid_argument("kernel-table: need 0 < xmin < xmax and points >= 2");
  ZKernel zk(rc.kernel);
  std::string csv = "x,z\n";
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < rc.points; ++i) {
    double x = rc.xmin + (rc.xmax - rc.xmin) * i / (rc.points - 1);
    double z = zk(x);
    if (rc.format == "json")
      arr.push_back(nlohmann::json{{"x", x}, {"z", z}});
    else
      csv += fmt17(x) + "," + fmt17(z) + "\n";
  }
  std::string table = rc.format == "json" ? "kernel_table.json" : "kernel_table.csv";
  if (rc.format == "json")
    write_json(rc, table, arr);
  else
    write_text_atomic(out_path(rc, table), csv);
  std::cout << "kernel table: " << rc.points << " points on [" << fmt17(rc.xmin) << ", "
            << fmt17(rc.xmax) << "], contour height " << fmt17(zk.height()) << "; wrote "
            << table << " in " << rc.out_dir << "\n";
  return 0;
}

int cmd_expsum_bench(const RunConfig& rc) {
  std::mt19937_64 rng(rc.seed);
  std::string csv = "scale,q,amplitude,entries,sum_re,sum_im,sum_abs,k_bound,b_norm,ratio\n";
  nlohmann::json arr = nlohmann::json::array();
  double max_ratio = 0.0;
  for (i64 scale : {4, 8, 16, 32}) {
    for (const char* mode : {"flat", "decay"}) {
      DIParams p;
      p.C = p.D = p.N = p.R = p.S = static_cast<double>(scale);
      p.q = 1 + static_cast<i64>(rng() % 5);
      i64 c0 = static_cast<i64>(rng() % static_cast<u64>(p.q));
      i64 d0 = static_cast<i64>(rng() % static_cast<u64>(p.q));
      DICoefficients b;
      std::uniform_int_distribution<i64> pick_n(1, scale), pick_rs(scale + 1, 2 * scale);
      for (int k = 0; k < 40; ++k) {
        DITriple t{pick_n(rng), pick_rs(rng), pick_rs(rng)};
        double sign = (rng() & 1) ? 1.0 : -1.0;
        b.entries.push_back({t, sign});
      }
      bool flat = std::string(mode) == "flat";
      DIAmplitude g = [flat](i64 c, i64 d, i64 n, i64 r, i64 s) {
        if (flat) return 1.0;
        return 1.0 / (1.0 + 0.01 * static_cast<double>(c + d + n + r + s));
      };
      DIQuintupleResult res = di_quintuple_sum(p, b, g, c0, d0);
      max_ratio = std::max(max_ratio, res.ratio);
      if (rc.format == "json") {
        arr.push_back(nlohmann::json{{"scale", scale},
                                     {"q", p.q},
                                     {"amplitude", mode},
                                     {"entries", b.entries.size()},
                                     {"sum_re", res.sum.real()},
                                     {"sum_im", res.sum.imag()},
                                     {"sum_abs", std::abs(res.sum)},
                                     {"k_bound", res.k_bound},
                                     {"b_norm", res.b_norm},
                                     {"ratio", res.ratio}});
      } else {
        csv += std::to_string(scale) + "," + std::to_string(p.q) + "," + mode + "," +
               std::to_string(b.entries.size()) + "," + fmt17(res.sum.real()) + "," +
               fmt17(res.sum.imag()) + "," + fmt17(std::abs(res.sum)) + "," +
               fmt17(res.k_bound) + "," + fmt17(res.b_norm) + "," + fmt17(res.ratio) + "\n";
      }
    }
  }
  std::string table = rc.format == "json" ? "expsum_bench.json" : "expsum_bench.csv";
  if (rc.format == "json")
    write_json(rc, table, arr);
  else
    write_text_atomic(out_path(rc, table), csv);
  std::cout << "expsum bench: 8 sweeps, max |sum|/(K*|b|) = " << fmt17(max_ratio)
            << " (diagnostic only); wrote " << table << " in " << rc.out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------- selftest

struct SuiteResult {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;  // first failure wins the headline
    pass = false;
  }
};

SuiteResult suite_characters() {
  SuiteResult r;
  for (i64 q = 1; q <= 150; ++q) {
    CharacterSet set = enumerate_characters(q);
    i64 brute = 0;
    for (const Character& chi : set.chars)
      if (chi.is_primitive()) ++brute;
    if (brute != phi_star(q)) {
      r.fail("primitive count mismatch at q=" + std::to_string(q));
      return r;
    }
  }
  for (i64 q = 2; q <= 80; ++q) {
    CharacterSet set = enumerate_characters(q);
    std::vector<cplx> eq = unity_table(q);
    for (const Character& chi : set.chars) {
      if (!chi.is_primitive() || chi.is_principal()) continue;
      double err = std::abs(std::abs(gauss_sum(chi, eq)) - std::sqrt(static_cast<double>(q)));
      if (err > 1e-10 * std::sqrt(static_cast<double>(q))) {
        r.fail("gauss sum modulus off at q=" + std::to_string(q));
        return r;
      }
    }
  }
  for (i64 q = 3; q <= 30; ++q) {
    CharacterSet set = enumerate_characters(q);
    for (i64 m = 1; m <= 8; ++m)
      for (i64 n = 1; n <= 8; ++n) {
        if (gcd64(m * n, q) != 1) continue;
        OrthogonalityCheck oc = even_orthogonality(set, m, n);
        if (std::abs(oc.lhs - oc.rhs) > 1e-9) {
          r.fail("orthogonality off at q=" + std::to_string(q) + ", m=" + std::to_string(m) +
                 ", n=" + std::to_string(n));
          return r;
        }
      }
  }
  return r;
}

SuiteResult suite_lvalue() {
  SuiteResult r;
  double lhs = hurwitz_zeta_half(0.5);
  double rhs = (std::sqrt(2.0) - 1.0) * hurwitz_zeta_half(1.0);
  if (std::abs(lhs - rhs) > 1e-12) r.fail("half-shift zeta identity off");

  ZKernel zk;
  if (!(std::abs(zk(8.0)) < 1e-14)) r.fail("kernel tail too fat at x=8");
  for (i64 q : {5, 8, 12, 13}) {
    CharacterSet set = enumerate_characters(q);
    double xstar = kernel_cutoff(zk);
    std::vector<double> ztab = z_table(zk, q, xstar);
    std::vector<double> hz = hurwitz_half_table(q);
    for (const Character& chi : set.chars) {
      if (!chi.is_primitive() || !chi.is_even() || chi.is_principal()) continue;
      double direct = std::norm(lvalue_direct(chi, hz));
      AfeResult afe = lvalue_sq_afe(chi, ztab, xstar);
      if (std::abs(afe.value - direct) > 1e-6 * std::max(direct, 1e-3)) {
        r.fail("smoothed square vs direct mismatch at q=" + std::to_string(q));
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_expsums(u64 seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 300; ++trial) {
    i64 c = 1 + static_cast<i64>(rng() % 80);
    i64 m = static_cast<i64>(rng() % 200) - 100;
    i64 n = static_cast<i64>(rng() % 200) - 100;
    // brute force with inverses found by scanning
    cplx naive{0.0, 0.0};
    for (i64 x = 0; x < c; ++x) {
      if (gcd64(x, c) != 1) continue;
      i64 xbar = 0;
      for (i64 y = 0; y < c; ++y)
        if ((x * y) % c == 1 % c) {
          xbar = y;
          break;
        }
      double ang = 2.0 * 3.14159265358979323846 *
                   static_cast<double>(((m % c) * x + (n % c) * xbar) % c) / static_cast<double>(c);
      naive += cplx{std::cos(ang), std::sin(ang)};
    }
    if (std::abs(kloosterman(m, n, c) - naive) > 1e-9) {
      r.fail("kloosterman mismatch at c=" + std::to_string(c));
      return r;
    }
  }
  for (i64 w = 1; w <= 80; ++w)
    for (i64 k = -80; k <= 80; ++k)
      if (std::abs(ramanujan(w, k)) > static_cast<double>(gcd64(k, w)) + 1e-9) {
        r.fail("ramanujan bound broken at w=" + std::to_string(w));
        return r;
      }
  for (i64 x = 1; x <= 60; ++x)
    for (i64 y = 1; y <= 60; ++y) {
      if (gcd64(x, y) != 1) continue;
      i64 xbar = inv_mod(x, y), ybar = inv_mod(y, x);
      if (xbar * x + ybar * y != 1 + reciprocity_defect(x, y) * x * y) {
        r.fail("reciprocity identity off at x=" + std::to_string(x) +
               ", y=" + std::to_string(y));
        return r;
      }
    }
  return r;
}

SuiteResult suite_weights() {
  SuiteResult r;
  const double pi = 3.14159265358979323846;
  for (double T : {4.0, 10.0}) {
    if (fourier_b(T, 0) != 1.0) r.fail("b(0) != 1");
    for (i64 k = 1; 2 * k <= static_cast<i64>(T); ++k)
      if (fourier_b(T, k) < 4.0 / (pi * pi) - 1e-12) {
        r.fail("plateau bound broken at T=" + fmt17(T) + ", k=" + std::to_string(k));
        return r;
      }
  }
  WeightConfig cfg;  // T = 10, K = 100 via Q = 100, eta1 = eps = 1/2
  cfg.Q = 100.0;
  cfg.eta1 = 0.5;
  cfg.eps_split = 0.5;
  double cap = 2.0 * 100.0 * std::exp(-1.0) / (pi * pi * static_cast<double>(cfg.K()));
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.5 + static_cast<double>(i) / 1000.0;
    PhiSplit ps = phi_split(cfg, t);
    if (std::abs(ps.phi1 + ps.phi2 - cplx{ps.phi, 0.0}) > 4e-16 * (1.0 + std::abs(ps.phi1))) {
      r.fail("phi split does not reconstruct at t=" + fmt17(t));
      return r;
    }
    if (std::abs(ps.phi2) > cap + 1e-12) {
      r.fail("phi2 tail above its bound at t=" + fmt17(t));
      return r;
    }
  }
  return r;
}

SuiteResult suite_optimizer() {
  SuiteResult r;
  for (double theta : {0.1, 0.25, 0.4})
    for (int d = 1; d <= 5; ++d) {
      OptimizeResult res = optimize(d, theta, theta);
      rational t(theta);
      if (res.ratio != 2 * t / (1 + 2 * t)) {
        r.fail("achieved ratio off at d=" + std::to_string(d) + ", theta=" + fmt17(theta));
        return r;
      }
      if (res.p1.coeffs()[1] != rational(1)) {
        r.fail("argmax is not the identity at d=" + std::to_string(d));
        return r;
      }
    }
  for (const auto& [e1, e2] : {std::pair<rational, rational>{rational(1, 1000), rational(1, 1000)},
                               {rational(1, 200), rational(1, 100)}}) {
    rational xi = 41 * e1 + 5 * e2;
    rational theta_star = rational(1, 2) - xi;
    if (c_eta(e1, e2) + sandwich_value(theta_star, theta_star) != rational(1, 2)) {
      r.fail("c_eta complement identity broken");
      return r;
    }
  }
  return r;
}

SuiteResult suite_moments() {
  SuiteResult r;
  WeightConfig cfg;
  cfg.Q = 30.0;
  ModulusSet ms = build_modulus_set(cfg);
  MollifierSpec spec(0.2, 0.2, PolySpec::linear(), PolySpec::linear(), 30.0);
  MomentReport one = compute_moments(ms, spec, 1e-8, 1);
  MomentReport three = compute_moments(ms, spec, 1e-8, 3);
  if (one.s2 < 0.0) r.fail("s2 negative");
  if (one.cs_bound > one.census.even_nonvanishing + 1e-9)
    r.fail("cauchy-schwarz bound above the census");
  if (one.s1.real() != three.s1.real() || one.s1.imag() != three.s1.imag() ||
      one.s2 != three.s2)
    r.fail("thread count changed the moments");
  return r;
}

SuiteResult suite_cache(const RunConfig& rc) {
  SuiteResult r;
  if (!rc.cache_path.empty() && fs::exists(rc.cache_path)) {
    FileCache provided(rc.cache_path);
    if (provided.dropped_lines() > 0)
      r.fail("provided cache was corrupted: dropped " +
             std::to_string(provided.dropped_lines()) + " line(s), file repaired");
  }
  fs::path dir = fs::temp_directory_path() / "mollab_selftest";
  fs::create_directories(dir);
  fs::path p = dir / "cache_probe.jsonl";
  fs::remove(p);
  CharacterSet set = enumerate_characters(7);
  std::vector<std::pair<i64, cplx>> written;
  {
    FileCache cache(p.string());
    std::vector<double> hz = hurwitz_half_table(7);
    for (const Character& chi : set.chars) {
      if (chi.is_principal()) continue;
      cplx L = lvalue_direct(chi, hz);
      cache.store(chi, L);
      written.push_back({chi.index(), L});
    }
  }
  {
    FileCache cache(p.string());
    for (const auto& [index, L] : written) {
      auto hit = cache.lookup(7, index);
      if (!hit || hit->real() != L.real() || hit->imag() != L.imag()) {
        r.fail("round-trip changed a value");
        return r;
      }
    }
  }
  {
    std::ofstream out(p, std::ios::app);
    out << "garbage\n";
  }
  FileCache repaired(p.string());
  if (repaired.dropped_lines() != 1) r.fail("corruption not detected");
  fs::remove(p);
  return r;
}

int cmd_selftest(const RunConfig& rc) {
  std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
      {"characters", [] { return suite_characters(); }},
      {"lvalue", [] { return suite_lvalue(); }},
      {"expsums", [&] { return suite_expsums(rc.seed); }},
      {"weights", [] { return suite_weights(); }},
      {"optimizer", [] { return suite_optimizer(); }},
      {"moments", [] { return suite_moments(); }},
      {"cache", [&] { return suite_cache(rc); }},
  };
  if (!rc.suite.empty()) {
    bool known = false;
    for (const auto& [name, fn] : suites) known = known || name == rc.suite;
    if (!known) {
      std::cerr << "unknown suite '" << rc.suite << "'; available:";
      for (const auto& [name, fn] : suites) std::cerr << " " << name;
      std::cerr << "\n";
      return 2;
    }
  }
  int failures = 0, ran = 0;
  for (const auto& [name, fn] : suites) {
    if (!rc.suite.empty() && name != rc.suite) continue;
    ++ran;
    SuiteResult res = fn();
    if (res.pass) {
      std::cout << name << ": pass\n";
    } else {
      std::cout << name << ": FAIL -- " << res.detail << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "selftest: all " << ran << " suite(s) pass\n";
    return 0;
  }
  std::cout << "selftest: " << failures << " of " << ran << " suite(s) FAILED\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  std::string g_even_str;

  CLI::App app{"desk-scale laboratory for mollified central-value moments"};
  app.set_config("--config", "", "flat key = value configuration file (# comments); flags win");
  app.option_defaults()->always_capture_default();

  app.add_option("--Q", rc.weight.Q, "window center");
  app.add_option("--eta1", rc.weight.eta1, "tent exponent: T = Q^eta1");
  app.add_option("--eta2", rc.weight.eta2, "progression exponent: D <= Q^eta2");
  app.add_option("--eps-split", rc.weight.eps_split, "split exponent: K = ceil(Q^(eta1+eps))");
  app.add_option("--a", rc.weight.a, "progression residue q = a mod D");
  app.add_option("--D", rc.weight.D, "progression modulus");
  app.add_option("--theta1", rc.theta1, "first mollifier length exponent, y1 = Q^theta1");
  app.add_option("--theta2", rc.theta2, "second mollifier length exponent");
  app.add_option("--poly1", rc.poly1, "first shape polynomial, comma coefficients from x^0");
  app.add_option("--poly2", rc.poly2, "second shape polynomial");
  app.add_option("--tau-nv", rc.tau_nv, "non-vanishing threshold on |L(1/2,chi)|");
  app.add_option("--threads", rc.threads, "worker threads (0 = all hardware threads)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache", rc.cache_path, "central-value cache file (JSON lines)");
  app.add_option("--out", rc.out_dir, "output directory");
  app.add_option("--format", rc.format, "table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--force", rc.force, "run despite constraint violations");
  app.add_option("--seed", rc.seed, "seed for randomized sweeps");
  app.add_option("--suite", rc.suite, "selftest: run only this suite");
  app.add_option("--degree", rc.degree, "optimize: shape polynomial degree (1..8)");
  app.add_option("--c0", rc.kernel.c0, "kernel contour abscissa");
  app.add_option("--kernel-tol", rc.kernel.tol, "kernel refinement tolerance");
  app.add_option("--h0", rc.kernel.h0, "kernel coarsest trapezoid step");
  app.add_option("--max-halvings", rc.kernel.max_halvings, "kernel step-halving cap");
  app.add_option("--tail-eps", rc.kernel.tail_eps, "kernel contour height threshold");
  app.add_option("--g-even", g_even_str, "kernel window polynomial, coefficients of s^0,s^2,...");
  app.add_option("--xmin", rc.xmin, "kernel-table grid start");
  app.add_option("--xmax", rc.xmax, "kernel-table grid end");
  app.add_option("--points", rc.points, "kernel-table grid size");

  CLI::App* census_cmd = app.add_subcommand("census", "non-vanishing census over the window");
  CLI::App* moments_cmd = app.add_subcommand("moments", "mollified first and second moments");
  CLI::App* optimize_cmd = app.add_subcommand("optimize", "shape polynomial optimization");
  CLI::App* kernel_cmd = app.add_subcommand("kernel-table", "dump the smoothing kernel grid");
  CLI::App* bench_cmd = app.add_subcommand("expsum-bench", "quintuple-sum ratio sweeps");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "invariant battery");
  for (CLI::App* sub : {census_cmd, moments_cmd, optimize_cmd, kernel_cmd, bench_cmd,
                        selftest_cmd})
    sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // anything but help/version is a config problem
  }

  try {
    if (!g_even_str.empty()) {
      rc.kernel.g_even.clear();
      std::stringstream ss(g_even_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) rc.kernel.g_even.push_back(std::stod(tok));
    }
    if (census_cmd->parsed()) return cmd_census(rc);
    if (moments_cmd->parsed()) return cmd_moments(rc);
    if (optimize_cmd->parsed()) return cmd_optimize(rc);
    if (kernel_cmd->parsed()) return cmd_kernel_table(rc);
    if (bench_cmd->parsed()) return cmd_expsum_bench(rc);
    if (selftest_cmd->parsed()) return cmd_selftest(rc);
    return 2;  // unreachable: require_subcommand guarantees one
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
