#include "mollab/mollifier.hpp"

#include <cmath>
#include <stdexcept>

#include "mollab/kahan.hpp"

namespace mollab {

PolySpec::PolySpec(std::vector<rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 2) throw std::invalid_argument("PolySpec: need degree >= 1");
  if (c_[0] != 0) throw std::invalid_argument("PolySpec: P(0) must be 0");
  rational sum = 0;
  for (const auto& c : c_) sum += c;
  if (sum != 1) throw std::invalid_argument("PolySpec: P(1) must be 1");
  cd_.reserve(c_.size());
  for (const auto& c : c_) cd_.push_back(to_double(c));
}

PolySpec PolySpec::linear() { return PolySpec({rational(0), rational(1)}); }

double PolySpec::operator()(double x) const {
  double v = 0.0;
  for (size_t j = cd_.size(); j-- > 0;) v = v * x + cd_[j];
  return v;
}

rational PolySpec::at(const rational& x) const {
  rational v = 0;
  for (size_t j = c_.size(); j-- > 0;) v = v * x + c_[j];
  return v;
}

MollifierSpec::MollifierSpec(double t1, double t2, PolySpec q1, PolySpec q2, double Qv)
    : theta1(t1), theta2(t2), p1(std::move(q1)), p2(std::move(q2)), Q(Qv) {
  if (!(theta1 > 0.0 && theta1 < 0.5 && theta2 > 0.0 && theta2 < 0.5))
    throw std::invalid_argument("MollifierSpec: theta_i must lie in (0, 1/2)");
  if (!(Q >= 1.0)) throw std::invalid_argument("MollifierSpec: Q must be >= 1");
}

double MollifierSpec::y1() const { return std::pow(Q, theta1); }
double MollifierSpec::y2() const { return std::pow(Q, theta2); }

double p_bracket(const PolySpec& P, double y, i64 ell) {
  if (!(y > 1.0)) throw std::invalid_argument("p_bracket: need y > 1");
  if (ell < 1 || static_cast<double>(ell) > y)
    throw std::invalid_argument("p_bracket: ell outside [1, y]");
  return P(std::log(y / static_cast<double>(ell)) / std::log(y));
}

namespace {

// Shared core of the two pieces: sum_{ell <= y} mu(ell) chi(ell) ell^{-1/2}
// P[ell].  The ell = 1 term is exactly 1 (and is the whole sum when y < 2,
// where the bracket's y > 1 precondition would bite).
cplx mollifier_sum(const Character& chi, const PolySpec& P, double y, const ArithTable& tab) {
  i64 top = static_cast<i64>(std::floor(y));
  if (tab.limit < top) throw std::invalid_argument("mollifier sum: sieve table too short");
  KahanCSum acc;
  acc.add({1.0, 0.0});
  for (i64 ell = 2; ell <= top; ++ell) {
    if (tab.mu[ell] == 0) continue;
    cplx cv = chi(ell);
    if (cv.real() == 0.0 && cv.imag() == 0.0) continue;
    double t = static_cast<double>(tab.mu[ell]) * p_bracket(P, y, ell) /
               std::sqrt(static_cast<double>(ell));
    acc.add(cv * t);
  }
  return acc.value();
}

ArithTable table_for(double y) { return ArithTable(std::max<i64>(1, static_cast<i64>(y))); }

}  // namespace

cplx m_is(const Character& chi, const MollifierSpec& spec, const ArithTable& tab) {
  return mollifier_sum(chi, spec.p1, spec.y1(), tab);
}

cplx m_is(const Character& chi, const MollifierSpec& spec) {
  return m_is(chi, spec, table_for(spec.y1()));
}

cplx m_mv(const Character& chi, const MollifierSpec& spec, const ArithTable& tab) {
  if (!chi.is_primitive())
    throw std::invalid_argument("m_mv: primitive character required");
  Character bar = chi.conjugate();
  return epsilon_chi(bar) * mollifier_sum(bar, spec.p2, spec.y2(), tab);
}

cplx m_mv(const Character& chi, const MollifierSpec& spec) {
  return m_mv(chi, spec, table_for(spec.y2()));
}

cplx mollifier_m(const Character& chi, const MollifierSpec& spec, const ArithTable& tab) {
  return m_is(chi, spec, tab) + m_mv(chi, spec, tab);
}

rational poly_prime_sq_integral(const PolySpec& P) {
  const auto& c = P.coeffs();
  rational I = 0;
  for (size_t j = 1; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (size_t k = 1; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      I += rational(static_cast<i64>(j * k), static_cast<i64>(j + k - 1)) * c[j] * c[k];
    }
  }
  return I;
}

rational lambda_coeff(const PolySpec& P, const rational& theta) {
  if (theta <= 0) throw std::invalid_argument("lambda_coeff: theta must be positive");
  rational p1 = P.at(1);
  return p1 * p1 + poly_prime_sq_integral(P) / theta;
}

double lambda_coeff(const PolySpec& P, double theta) {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::invalid_argument("lambda_coeff: theta must be positive");
  return to_double(lambda_coeff(P, rational(theta)));
}

}  // namespace mollab
