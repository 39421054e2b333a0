#pragma once
// Averaging weights for the modulus sum: the fixed smooth bump Psi supported
// on [1/2, 3/2], the period-1 tent H_T of height T and base 2/T, its Fourier
// coefficients b(k), and the split
//
//   Phi(t) = Psi(t) H_T(t) = Phi_1(t) + Phi_2(t),
//   Phi_1(t) = sum_{|k| <= K} b(k) Psi(t) e(kt),
//
// with K = ceil(Q^{eta1 + eps_split}) chosen so the discarded tail obeys
// |Phi_2| <= Psi(t) * 2 T^2 / (pi^2 K) pointwise.  validate_config collects
// the parameter constraints (they gate what a run may claim, so failures are
// returned as data, not thrown).

#include <complex>
#include <string>
#include <vector>

#include "mollab/arith.hpp"
#include "mollab/mollifier.hpp"

namespace mollab {

struct WeightConfig {
  double Q = 100.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eps_split = 0.05;  // the epsilon in K = Q^{eta1 + epsilon}
  i64 a = 1;                // progression q = a mod D
  i64 D = 1;
  double T() const;
  i64 K() const;
};

// exp(-1/(1 - 4(t-1)^2)) on |t - 1| < 1/2, else 0; max value e^{-1} at t = 1.
double psi_bump(double t);

// Period-1 extension of T(1 - T|t|) on |t| <= 1/T, zero on the rest of the
// fundamental domain.  T >= 1 required (the tent must fit in one period).
double h_tent(double T, double t);

// Fourier coefficients of h_tent: b(0) = 1, b(k) = T^2 sin^2(pi k/T)/(pi k)^2.
double fourier_b(double T, i64 k);

struct PhiSplit {
  cplx phi1;
  cplx phi2;   // phi - phi1 by definition, so phi1 + phi2 = phi exactly
  double phi;  // Psi(t) H_T(t)
};
PhiSplit phi_split(const WeightConfig& cfg, double t);

// Empty iff 7 eta1 + eta2 < 1/12, both theta_i < 1/2 - 41 eta1 - 5 eta2,
// D <= Q^{eta2}, and gcd(a, D) = 1.  Each entry names the failed constraint.
std::vector<std::string> validate_config(const WeightConfig& cfg, const MollifierSpec& spec);

}  // namespace mollab
