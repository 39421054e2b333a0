#pragma once
// Gamma on the complex plane via the Lanczos window (g = 7, 9 terms), with
// the reflection formula for Re z < 1/2.  Good for >= 12 significant digits
// on the vertical strip Re z in [0.2, 3], |Im z| <= 200, which covers every
// contour this project integrates on.  Real nonpositive integers are poles
// and throw.

#include <complex>

namespace mollab {

std::complex<double> complex_gamma(std::complex<double> z);

}  // namespace mollab
