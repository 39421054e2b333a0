#pragma once
// Central values L(1/2, chi) by two independent routes.
//
// Direct (the workhorse): for non-principal chi mod q,
//     L(1/2, chi) = q^{-1/2} sum_{a=1}^{q} chi(a) zeta(1/2, a/q),
// with the Hurwitz zeta computed by Euler-Maclaurin through B_10 and the cut
// length N chosen so the first omitted correction is below 1e-14.
//
// Smoothed square (the cross-check): for even primitive chi,
//     |L(1/2, chi)|^2 = 2 sum_{m,n >= 1} chi(m) conj(chi(n)) (mn)^{-1/2} Z(mn/q),
// where Z is the Mellin-type kernel
//     Z(x) = (1/2 pi i) int_{(c0)} [Gamma(s/2 + 1/4)/Gamma(1/4)]^2
//                                  (G(s)/s) (pi x)^{-s} ds.
// G is any even polynomial with G(0) = 1 and double zeros at +-1/2 (the
// default is (1 - 4 s^2)^2); the total is G-independent even though the
// individual Z values are not.  Z(x) -> 1 as x -> 0 (residue at s = 0) and
// decays fast enough beyond x ~ 5 that the double sum is truncated at
// mn <= q xstar with |Z(xstar)| < 1e-14.
//
// The contour integral runs by trapezoid rule on s = c0 + it, |t| <= H,
// symmetric nodes paired so cancellation happens before accumulation, with
// step halving until successive refinements differ by < tol.  The expensive
// Gamma factors are cached per refinement level and shared across every x.

#include <complex>
#include <memory>
#include <vector>

#include "mollab/characters.hpp"
#include "mollab/errors.hpp"

namespace mollab {

struct KernelConfig {
  std::vector<double> g_even = {1.0, -8.0, 16.0};  // G(s) = sum g_even[j] s^(2j)
  double c0 = 1.0;
  double tol = 1e-11;
  double h0 = 0.25;         // coarsest trapezoid step
  int max_halvings = 8;
  double tail_eps = 1e-16;  // integrand threshold fixing the height H
};

class ZKernel {
 public:
  explicit ZKernel(KernelConfig cfg = {});
  ~ZKernel();  // out of line: Level is incomplete here
  ZKernel(ZKernel&&) noexcept;
  ZKernel& operator=(ZKernel&&) noexcept;
  double operator()(double x) const;  // Z(x), x > 0
  const KernelConfig& config() const { return cfg_; }
  double height() const { return H_; }

 private:
  struct Level;
  KernelConfig cfg_;
  double H_;
  std::complex<double> integrand_factor(double t) const;
  void ensure_level(int level) const;
  std::unique_ptr<Level[]> levels_;
};

// Smallest integer abscissa x in 1..64 with |Z(x)| < 1e-14.
double kernel_cutoff(const ZKernel& zk);

// zeta(1/2, alpha) for alpha in (0, 1].  min_terms forces a longer direct
// sum than the error bound asks for (used by the doubling self-check).
double hurwitz_zeta_half(double alpha, int min_terms = 0);

// zeta(1/2, a/q) for a = 1..q; slot [0] is unused.
std::vector<double> hurwitz_half_table(i64 q);

// Principal characters are rejected; pass the per-modulus table when calling
// in a loop over characters mod the same q.
cplx lvalue_direct(const Character& chi);
cplx lvalue_direct(const Character& chi, const std::vector<double>& hz);

// Z(u/q) for u = 1..ceil(q*xstar); slot [0] unused.
std::vector<double> z_table(const ZKernel& zk, i64 q, double xstar);

struct AfeResult {
  double value;          // |L(1/2,chi)|^2
  double imag_residual;  // |Im| of the double sum before discarding
  double xstar;
  i64 terms;             // number of (m, n) pairs accumulated
};
AfeResult lvalue_sq_afe(const Character& chi, const ZKernel& zk);
AfeResult lvalue_sq_afe(const Character& chi, const std::vector<double>& ztab, double xstar);

}  // namespace mollab
