#pragma once
// Everything one invocation needs, assembled from defaults, an optional flat
// "key = value" config file (# comments), and command-line flags -- later
// sources win, so a config file is a reproduction recipe the flags can poke.
//
// Polynomials arrive as comma-separated coefficient lists, constant term
// first: "0,1" is P(x) = x, "0,1/2,1/2" mixes exact fractions, and a decimal
// like "0,0.5,0.5" converts through the exact binary value of the double.
// PolySpec then enforces P(0) = 0 and P(1) = 1 exactly.

#include <string>
#include <vector>

#include "mollab/lvalue.hpp"
#include "mollab/mollifier.hpp"
#include "mollab/weights.hpp"

namespace mollab {

struct RunConfig {
  WeightConfig weight;  // Q, eta1, eta2, eps_split, a, D
  double theta1 = 0.15, theta2 = 0.15;
  std::string poly1 = "0,1", poly2 = "0,1";
  KernelConfig kernel;
  double tau_nv = 1e-8;
  int threads = 0;  // 0 = one per hardware thread
  std::string cache_path;
  std::string out_dir = ".";
  std::string format = "csv";  // table format: csv | json
  bool force = false;          // run despite constraint violations
  u64 seed = 12345;            // randomized sweeps (expsum-bench, selftest)
  std::string suite;           // selftest filter; empty = all
  int degree = 3;              // optimize: polynomial degree
  double xmin = 0.01, xmax = 10.0;  // kernel-table grid
  int points = 200;
};

std::vector<rational> parse_poly(const std::string& s);

MollifierSpec make_spec(const RunConfig& rc);

int resolve_threads(int threads);

// The constraint violations that gate what a run may claim (empty = clean).
// Callers refuse to run on a non-empty result unless force is set.
std::vector<std::string> config_violations(const RunConfig& rc);

}  // namespace mollab
