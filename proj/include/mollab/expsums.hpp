#pragma once
// Complete exponential sums and the bilinear-form bound used to control them.
//
//   Kloosterman   S(m,n;c) = sum_{x mod c, (x,c)=1} e((m x + n xbar)/c)
//   Ramanujan     c_w(k)   = sum_{b mod w, (b,w)=1} e(b k / w)
//   reciprocity   xbar/y + ybar/x = (1 + xy*defect)/(xy)  (defect an integer)
//
// All phases are reduced with exact integer arithmetic (__int128) before ever
// touching a double, so no angle drift enters even at the top of the allowed
// range (s*c up to 2^40).
//
// di_bound is the envelope K with
//   K^2 = q C S (RS + N)(C + RD) + C^2 D S sqrt((RS + N) R) + D^2 N R ,
// the shape that controls sums of Kloosterman-type phases over congruence
// lattices.  (A variant of the last addend divides it by S; the form above is
// the one implemented, and the quintuple evaluator reports |sum|/(K*||b||_2)
// purely as a diagnostic ratio, never as a pass/fail gate.)

#include <complex>
#include <functional>
#include <vector>

#include "mollab/arith.hpp"

namespace mollab {

using cplx = std::complex<double>;

cplx kloosterman(i64 m, i64 n, i64 c);

double ramanujan(i64 w, i64 k);

// (xbar x + ybar y - 1) / (x y) for coprime x, y >= 1, with inverses
// normalized to [1, y] and [1, x].  Exact integer; throws on gcd(x,y) != 1.
i64 reciprocity_defect(i64 x, i64 y);

struct DIParams {
  double C = 1, D = 1, N = 1, R = 1, S = 1;
  i64 q = 1;
};

double di_bound(const DIParams& p);

struct DITriple {
  i64 n, r, s;
  auto operator<=>(const DITriple&) const = default;
};

// Sparse coefficients b_{n,r,s} supported on (0,N] x (R,2R] x (S,2S].
struct DICoefficients {
  std::vector<std::pair<DITriple, double>> entries;
  double l2_norm() const;
};

struct DIQuintupleResult {
  cplx sum;
  double k_bound;
  double b_norm;
  double ratio;  // |sum| / (k_bound * b_norm), 0 when the denominator is 0
};

// sum over c = c0 (q) in [C,2C], d = d0 (q) in [D,2D], (n,r,s) in supp(b)
// with gcd(q r d, s c) = 1 of  b_{n,r,s} g(c,d,n,r,s) e(n rdbar(sc) / sc),
// where rdbar(sc) inverts rd mod sc.  The inverse is computed once per
// (r,s,c,d) and shared across n; terms are accumulated in a fixed order with
// compensated summation, so the result does not depend on evaluation
// grouping.
using DIAmplitude = std::function<double(i64 c, i64 d, i64 n, i64 r, i64 s)>;

DIQuintupleResult di_quintuple_sum(const DIParams& p, const DICoefficients& b,
                                   const DIAmplitude& g, i64 c0, i64 d0);

}  // namespace mollab
