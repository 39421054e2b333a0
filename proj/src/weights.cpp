#include "mollab/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "mollab/kahan.hpp"

namespace mollab {

double WeightConfig::T() const { return std::pow(Q, eta1); }

i64 WeightConfig::K() const {
  return static_cast<i64>(std::ceil(std::pow(Q, eta1 + eps_split)));
}

double psi_bump(double t) {
  double u = t - 1.0;
  double d = 1.0 - 4.0 * u * u;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

double h_tent(double T, double t) {
  if (!(T >= 1.0)) throw std::invalid_argument("h_tent: need T >= 1");
  double r = t - std::round(t);  // representative in [-1/2, 1/2]
  double a = std::abs(r);
  if (a * T >= 1.0) return 0.0;
  return T * (1.0 - T * a);
}

double fourier_b(double T, i64 k) {
  if (!(T >= 1.0)) throw std::invalid_argument("fourier_b: need T >= 1");
  if (k == 0) return 1.0;
  double s = std::sin(M_PI * static_cast<double>(k) / T);
  double den = M_PI * static_cast<double>(k);
  return T * T * s * s / (den * den);
}

PhiSplit phi_split(const WeightConfig& cfg, double t) {
  double T = cfg.T();
  i64 K = cfg.K();
  double psi = psi_bump(t);
  double phi = psi * h_tent(T, t);
  // b is even, so the +-k pair contributes 2 b(k) cos(2 pi k t): the partial
  // sum is exactly real and the pairing happens before accumulation.
  KahanSum s;
  s.add(1.0);  // b(0)
  for (i64 k = 1; k <= K; ++k) {
    double b = fourier_b(T, k);
    if (b == 0.0) continue;
    s.add(2.0 * b * std::cos(2.0 * M_PI * static_cast<double>(k) * t));
  }
  cplx phi1{psi * s.value(), 0.0};
  return {phi1, cplx{phi, 0.0} - phi1, phi};
}

std::vector<std::string> validate_config(const WeightConfig& cfg, const MollifierSpec& spec) {
  std::vector<std::string> bad;
  if (!(7.0 * cfg.eta1 + cfg.eta2 < 1.0 / 12.0))
    bad.push_back("7*eta1 + eta2 < 1/12");
  double cap = 0.5 - 41.0 * cfg.eta1 - 5.0 * cfg.eta2;
  if (!(spec.theta1 < cap)) bad.push_back("theta1 < 1/2 - 41*eta1 - 5*eta2");
  if (!(spec.theta2 < cap)) bad.push_back("theta2 < 1/2 - 41*eta1 - 5*eta2");
  if (!(static_cast<double>(cfg.D) <= std::pow(cfg.Q, cfg.eta2)))
    bad.push_back("D <= Q^eta2");
  if (gcd64(cfg.a, cfg.D) != 1) bad.push_back("gcd(a, D) = 1");
  return bad;
}

}  // namespace mollab
