#pragma once
// The two-piece mollifier
//
//   M(chi) = M_IS(chi) + M_MV(chi),
//   M_IS = sum_{ell <= y1} mu(ell) chi(ell) ell^{-1/2} P1[ell],
//   M_MV = epsilon(conj chi) sum_{ell <= y2} mu(ell) conj(chi)(ell)
//                                            ell^{-1/2} P2[ell],
//
// where P[ell] abbreviates P(log(y/ell)/log y), the lengths are y_i =
// Q^{theta_i}, and the shape polynomials satisfy P(0) = 0, P(1) = 1.  Those
// two constraints are enforced exactly on rational coefficients, because the
// quality functional
//
//   lambda(P, theta) = P(1)^2 + (1/theta) int_0^1 P'(x)^2 dx
//
// and the optimizer that minimizes it work over Q; floating point enters
// only when a polynomial is actually evaluated inside a character sum.

#include <complex>
#include <vector>

#include "mollab/arith.hpp"
#include "mollab/characters.hpp"
#include "mollab/rational.hpp"

namespace mollab {

// Monomial-basis polynomial with P(0) = 0 and P(1) = 1: constant term zero,
// coefficients summing to one, both checked exactly at construction.
class PolySpec {
 public:
  explicit PolySpec(std::vector<rational> coeffs);
  static PolySpec linear();  // P(x) = x

  i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
  const std::vector<rational>& coeffs() const { return c_; }
  double operator()(double x) const;     // Horner on cached double coefficients
  rational at(const rational& x) const;  // exact evaluation

 private:
  std::vector<rational> c_;
  std::vector<double> cd_;
};

// Shape of the full mollifier: lengths y_i = Q^{theta_i}.
struct MollifierSpec {
  MollifierSpec(double theta1, double theta2, PolySpec p1, PolySpec p2, double Q);
  double theta1, theta2;
  PolySpec p1, p2;
  double Q;
  double y1() const;
  double y2() const;
};

// P(log(y/ell)/log y): falls from P(1) = 1 at ell = 1 to P(0) = 0 at ell = y.
double p_bracket(const PolySpec& P, double y, i64 ell);

// The sums run over ell <= floor(y_i) (an ell tying y_i exactly is included,
// contributing P(0) = 0).  The table overloads exist for the census loops;
// the table must cover floor(y_i).
cplx m_is(const Character& chi, const MollifierSpec& spec);
cplx m_is(const Character& chi, const MollifierSpec& spec, const ArithTable& tab);

// Primitive chi only: epsilon is meaningless otherwise.
cplx m_mv(const Character& chi, const MollifierSpec& spec);
cplx m_mv(const Character& chi, const MollifierSpec& spec, const ArithTable& tab);

cplx mollifier_m(const Character& chi, const MollifierSpec& spec, const ArithTable& tab);

// int_0^1 P'(x)^2 dx and lambda(P, theta), exactly; the double overload
// converts theta to its exact binary rational first, so it agrees with the
// exact path to the last bit.
rational poly_prime_sq_integral(const PolySpec& P);
rational lambda_coeff(const PolySpec& P, const rational& theta);
double lambda_coeff(const PolySpec& P, double theta);

}  // namespace mollab
