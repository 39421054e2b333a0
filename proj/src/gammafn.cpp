#include "mollab/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace mollab {

namespace {
// Lanczos coefficients for g = 7, n = 9 (the classic double-precision set).
constexpr double kLanczosG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;
}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw std::domain_error("complex_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    std::complex<double> s = std::sin(M_PI * z);
    return M_PI / (s * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace mollab
