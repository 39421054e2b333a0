#pragma once
// Maximizing the non-vanishing ratio
//
//   r(P1, P2) = (P1(1) + P2(1))^2
//             / (lambda(P1, theta1) + lambda(P2, theta2) + 2 P1(1) P2(1))
//
// over shape polynomials.  With P_i(1) = 1 pinned this is 4/(4 + I1/theta1 +
// I2/theta2), I_i = int_0^1 P_i'(x)^2 dx, so the maximization splits into
// minimizing each I_i: a positive-definite quadratic with one affine
// constraint, solved exactly over the rationals via its normal equations
// (Gram matrix jk/(j+k-1)).  Cauchy-Schwarz gives I >= (int P')^2 = 1 with
// equality only for P(x) = x, so the argmax is the identity polynomial at
// every degree -- the solver doesn't assume that, the tests assert it.
//
// Closed forms carried alongside: the equal-theta ratio 2 theta/(1+2 theta),
// the sandwich value (theta1+theta2)/(1+theta1+theta2) (these agree iff
// theta1 = theta2; for unequal thetas the true maximum is strictly smaller
// and both numbers are reported rather than compared), the admissibility cap
// theta_max = 1/2 - 41 eta1 - 5 eta2, and
//
//   c(eta1, eta2) = 1/2 - (1 - 2 xi)/(2 - 2 xi),   xi = 41 eta1 + 5 eta2,
//
// which satisfies c + sandwich(theta*, theta*) = 1/2 exactly at theta* =
// 1/2 - xi (checked in rational arithmetic).

#include <string>
#include <utility>
#include <vector>

#include "mollab/mollifier.hpp"

namespace mollab {

struct OptimizeResult {
  PolySpec p1, p2;
  rational ratio;      // achieved non-vanishing ratio, exact
  double closed_form;  // 4/(4 + 1/theta1 + 1/theta2)
  double descent_gap;  // |coordinate-descent I - exact I|, worse of the two
  std::vector<std::pair<std::string, double>> slack;  // constraint residuals
};

// theta_i in (0, 1/2) required.  The double overload converts to the exact
// binary rational, so it is the same number.
rational nv_ratio(const PolySpec& p1, const PolySpec& p2, const rational& theta1,
                  const rational& theta2);
double nv_ratio(const PolySpec& p1, const PolySpec& p2, double theta1, double theta2);

// Degrees 1..8 (the Gram matrix turns numerically hopeless just beyond, and
// nothing past 8 changes the answer).
OptimizeResult optimize(int d, double theta1, double theta2);

// Function-value-only coordinate descent for min int_0^1 P'^2 at degree d:
// the cross-check for the exact solve.  Shares no linear algebra with it.
double descent_min_integral(int d);

rational sandwich_value(const rational& theta1, const rational& theta2);
double sandwich_value(double theta1, double theta2);

// xi = 41 eta1 + 5 eta2 must stay below 1/2.
rational c_eta(const rational& eta1, const rational& eta2);
double c_eta(double eta1, double eta2);

rational theta_max(const rational& eta1, const rational& eta2);
double theta_max(double eta1, double eta2);

}  // namespace mollab
