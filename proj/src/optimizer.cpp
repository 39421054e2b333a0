#include "mollab/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace mollab {

namespace {

void require_theta(const rational& t, const char* who) {
  if (!(t > 0 && t < rational(1, 2)))
    throw std::invalid_argument(std::string(who) + ": theta must lie in (0, 1/2)");
}

// Exact Gaussian elimination; A is small, symmetric, positive definite.
std::vector<rational> solve_exact(std::vector<std::vector<rational>> A, std::vector<rational> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("solve_exact: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (A[row][col] == 0) continue;
      rational f = A[row][col] / A[col][col];
      for (size_t k = col; k < n; ++k) A[row][k] -= f * A[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<rational> x(n);
  for (size_t row = n; row-- > 0;) {
    rational s = b[row];
    for (size_t k = row + 1; k < n; ++k) s -= A[row][k] * x[k];
    x[row] = s / A[row][row];
  }
  return x;
}

// Gram matrix of the derivative form: G_{jk} = int_0^1 (j x^{j-1})(k x^{k-1})
// = jk/(j+k-1), indices 1..d.
std::vector<std::vector<rational>> gram(int d) {
  std::vector<std::vector<rational>> A(d, std::vector<rational>(d));
  for (int j = 1; j <= d; ++j)
    for (int k = 1; k <= d; ++k)
      A[j - 1][k - 1] = rational(static_cast<i64>(j) * k, j + k - 1);
  return A;
}

}  // namespace

rational nv_ratio(const PolySpec& p1, const PolySpec& p2, const rational& theta1,
                  const rational& theta2) {
  require_theta(theta1, "nv_ratio");
  require_theta(theta2, "nv_ratio");
  rational a = p1.at(1), b = p2.at(1);
  rational num = (a + b) * (a + b);
  rational den = lambda_coeff(p1, theta1) + lambda_coeff(p2, theta2) + 2 * a * b;
  return num / den;
}

double nv_ratio(const PolySpec& p1, const PolySpec& p2, double theta1, double theta2) {
  return to_double(nv_ratio(p1, p2, rational(theta1), rational(theta2)));
}

OptimizeResult optimize(int d, double theta1, double theta2) {
  if (d < 1 || d > 8) throw std::invalid_argument("optimize: degree must lie in 1..8");
  rational t1(theta1), t2(theta2);
  require_theta(t1, "optimize");
  require_theta(t2, "optimize");

  // minimize c^T G c subject to sum c = 1: the Lagrange system is G c
  // proportional to the all-ones vector, so solve G x = 1 and normalize.
  std::vector<rational> x = solve_exact(gram(d), std::vector<rational>(d, rational(1)));
  rational s = 0;
  for (const auto& v : x) s += v;
  if (s == 0) throw std::logic_error("optimize: constraint normalization degenerate");
  std::vector<rational> coeffs(static_cast<size_t>(d) + 1, rational(0));
  for (int k = 1; k <= d; ++k) coeffs[k] = x[k - 1] / s;
  PolySpec best(coeffs);

  rational I = poly_prime_sq_integral(best);
  OptimizeResult res{best, best, nv_ratio(best, best, t1, t2),
                     4.0 / (4.0 + 1.0 / theta1 + 1.0 / theta2),
                     std::abs(descent_min_integral(d) - to_double(I)),
                     {}};
  res.slack = {
      {"p1(0)", to_double(res.p1.at(0))},
      {"p1(1)-1", to_double(res.p1.at(1) - 1)},
      {"p2(0)", to_double(res.p2.at(0))},
      {"p2(1)-1", to_double(res.p2.at(1) - 1)},
      {"I1-1", to_double(I - 1)},
      {"I2-1", to_double(I - 1)},
  };
  return res;
}

double descent_min_integral(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("descent_min_integral: degree must lie in 1..8");
  // coefficients c_1..c_d; featureless feasible start c_k = 1/d
  std::vector<double> c(d, 1.0 / static_cast<double>(d));
  auto F = [&](const std::vector<double>& cc) {
    double v = 0.0;
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        v += static_cast<double>(j) * k / static_cast<double>(j + k - 1) * cc[j - 1] * cc[k - 1];
    return v;
  };
  // move along c_m += t, c_1 -= t (keeps sum c = 1); the section is an exact
  // parabola, fitted from three function values -- no gradients anywhere
  double f0 = F(c);
  const double delta = 0.25;
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double biggest = 0.0;
    for (int m = 2; m <= d; ++m) {
      std::vector<double> plus = c, minus = c;
      plus[m - 1] += delta;
      plus[0] -= delta;
      minus[m - 1] -= delta;
      minus[0] += delta;
      double fp = F(plus), fm = F(minus);
      double curv = fp - 2.0 * f0 + fm;
      if (!(curv > 0.0)) continue;
      double t = 0.5 * delta * (fm - fp) / curv;
      c[m - 1] += t;
      c[0] -= t;
      double fn = F(c);
      if (fn > f0) {  // roundoff at the bottom: undo and treat as converged
        c[m - 1] -= t;
        c[0] += t;
        continue;
      }
      f0 = fn;
      biggest = std::max(biggest, std::abs(t));
    }
    if (biggest < 1e-12) break;
  }
  return f0;
}

rational sandwich_value(const rational& theta1, const rational& theta2) {
  return (theta1 + theta2) / (1 + theta1 + theta2);
}

double sandwich_value(double theta1, double theta2) {
  return (theta1 + theta2) / (1.0 + theta1 + theta2);
}

rational c_eta(const rational& eta1, const rational& eta2) {
  rational xi = 41 * eta1 + 5 * eta2;
  if (!(xi < rational(1, 2))) throw std::invalid_argument("c_eta: need 41*eta1 + 5*eta2 < 1/2");
  return rational(1, 2) - (1 - 2 * xi) / (2 - 2 * xi);
}

double c_eta(double eta1, double eta2) {
  return to_double(c_eta(rational(eta1), rational(eta2)));
}

rational theta_max(const rational& eta1, const rational& eta2) {
  return rational(1, 2) - 41 * eta1 - 5 * eta2;
}

double theta_max(double eta1, double eta2) {
  return 0.5 - 41.0 * eta1 - 5.0 * eta2;
}

}  // namespace mollab
