#pragma once
// Compensated (Kahan) accumulation.  Every reduction whose value appears in a
// report runs through one of these in a fixed traversal order, which is what
// makes reruns and thread-count changes bit-identical.

#include <complex>

namespace mollab {

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanCSum {
  KahanSum re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace mollab
