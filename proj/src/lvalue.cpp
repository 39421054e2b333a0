#include "mollab/lvalue.hpp"

#include <atomic>
#include <cmath>
#include <mutex>

#include "mollab/gammafn.hpp"
#include "mollab/kahan.hpp"

namespace mollab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kLnPi = 1.1447298858494001741434273513531;

// |B_12| / 12! * (1/2)(3/2)...(21/2): envelope constant of the first
// Euler-Maclaurin correction we omit.
const double kEmTailC = (691.0 / 2730.0) / 479001600.0 * (13749310575.0 / 2048.0);
}  // namespace

// ---------------------------------------------------------------- Z kernel

struct ZKernel::Level {
  std::atomic<bool> ready{false};
  std::mutex mu;
  std::vector<double> t;      // positive abscissas of this refinement level
  std::vector<cplx> qpos;     // integrand factor at +t (trapezoid weight baked in)
  std::vector<cplx> qneg;     // ... at -t
  cplx q0{0.0, 0.0};          // t = 0 node, level 0 only
};

cplx ZKernel::integrand_factor(double t) const {
  cplx s{cfg_.c0, t};
  cplx half = s * 0.5 + 0.25;
  static const double g14 = complex_gamma(cplx{0.25, 0.0}).real();
  cplx gg = complex_gamma(half) / g14;
  // G(s) as a polynomial in s^2, Horner
  cplx s2 = s * s;
  cplx G{0.0, 0.0};
  for (size_t j = cfg_.g_even.size(); j-- > 0;) G = G * s2 + cfg_.g_even[j];
  return gg * gg * G / s * std::exp(-s * kLnPi);
}

ZKernel::ZKernel(KernelConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.g_even.empty() || std::abs(cfg_.g_even[0] - 1.0) > 1e-12)
    throw std::invalid_argument("ZKernel: G(0) must equal 1");
  // double zero at s = 1/2: G and G' both vanish there
  double g = 0.0;
  for (size_t j = cfg_.g_even.size(); j-- > 0;) g = g * 0.25 + cfg_.g_even[j];
  double gp = 0.0;
  for (size_t j = 1; j < cfg_.g_even.size(); ++j)
    gp += cfg_.g_even[j] * static_cast<double>(2 * j) * std::pow(0.5, 2.0 * j - 1.0);
  if (std::abs(g) > 1e-10 || std::abs(gp) > 1e-10)
    throw std::invalid_argument("ZKernel: G must have a double zero at 1/2");
  if (!(cfg_.c0 > 0.0 && cfg_.c0 <= 3.0))
    throw std::invalid_argument("ZKernel: contour abscissa must lie in (0, 3]");
  if (cfg_.max_halvings < 2 || cfg_.max_halvings > 14)
    throw std::invalid_argument("ZKernel: max_halvings out of range");

  // Height: the Gamma^2 factor decays like e^{-pi t / 2}; extend until the
  // integrand is below tail_eps at H and just past it.
  H_ = 0.0;
  for (double h = 5.0; h <= 300.0; h += 5.0) {
    if (std::abs(integrand_factor(h)) < cfg_.tail_eps &&
        std::abs(integrand_factor(h + 1.25)) < cfg_.tail_eps &&
        std::abs(integrand_factor(h + 2.5)) < cfg_.tail_eps) {
      H_ = h;
      break;
    }
  }
  if (H_ == 0.0) throw ComputeError("ZKernel: integrand does not decay below tail_eps");
  levels_ = std::make_unique<Level[]>(static_cast<size_t>(cfg_.max_halvings) + 1);
}

ZKernel::~ZKernel() = default;
ZKernel::ZKernel(ZKernel&&) noexcept = default;
ZKernel& ZKernel::operator=(ZKernel&&) noexcept = default;

void ZKernel::ensure_level(int level) const {
  Level& lv = levels_[level];
  if (lv.ready.load(std::memory_order_acquire)) return;
  std::lock_guard<std::mutex> lock(lv.mu);
  if (lv.ready.load(std::memory_order_relaxed)) return;
  double h = cfg_.h0 / static_cast<double>(1 << level);
  i64 m = static_cast<i64>(std::llround(H_ / h));
  if (level == 0) {
    lv.q0 = integrand_factor(0.0);
    for (i64 j = 1; j <= m; ++j) {
      double t = static_cast<double>(j) * h;
      double w = (j == m) ? 0.5 : 1.0;  // trapezoid endpoint weight
      lv.t.push_back(t);
      lv.qpos.push_back(w * integrand_factor(t));
      lv.qneg.push_back(w * integrand_factor(-t));
    }
  } else {
    for (i64 j = 1; j < m; j += 2) {
      double t = static_cast<double>(j) * h;
      lv.t.push_back(t);
      lv.qpos.push_back(integrand_factor(t));
      lv.qneg.push_back(integrand_factor(-t));
    }
  }
  lv.ready.store(true, std::memory_order_release);
}

double ZKernel::operator()(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("ZKernel: x must be positive");
  double lx = std::log(x);
  double mag = std::exp(-cfg_.c0 * lx);
  auto level_sum = [&](const Level& lv) -> cplx {
    KahanCSum acc;
    for (size_t i = 0; i < lv.t.size(); ++i) {
      cplx w = std::polar(mag, -lv.t[i] * lx);  // x^{-c0-it}
      acc.add(lv.qpos[i] * w + lv.qneg[i] * std::conj(w));
    }
    return acc.value();
  };

  ensure_level(0);
  cplx T = cfg_.h0 * (level_sum(levels_[0]) + levels_[0].q0 * mag);
  bool converged = false;
  for (int l = 1; l <= cfg_.max_halvings; ++l) {
    ensure_level(l);
    double h = cfg_.h0 / static_cast<double>(1 << l);
    cplx Tn = 0.5 * T + h * level_sum(levels_[l]);
    double delta = std::abs(Tn - T) / kTwoPi;
    T = Tn;
    if (l >= 2 && delta < cfg_.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ComputeError("ZKernel: step-halving did not converge");
  if (std::abs(T.imag()) / kTwoPi > cfg_.tol * std::max(1.0, mag))
    throw ComputeError("ZKernel: imaginary residual exceeds tolerance");
  return T.real() / kTwoPi;
}

double kernel_cutoff(const ZKernel& zk) {
  for (int x = 1; x <= 64; ++x)
    if (std::abs(zk(static_cast<double>(x))) < 1e-14) return static_cast<double>(x);
  throw ComputeError("kernel_cutoff: no abscissa below 1e-14 in 1..64");
}

// ------------------------------------------------------------ Hurwitz zeta

double hurwitz_zeta_half(double alpha, int min_terms) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("hurwitz_zeta_half: alpha must lie in (0, 1]");
  int N = std::max(8, min_terms);
  while (kEmTailC * std::pow(static_cast<double>(N) + alpha, -11.5) > 1e-14) ++N;
  KahanSum s;
  for (int n = 0; n < N; ++n) s.add(1.0 / std::sqrt(static_cast<double>(n) + alpha));
  double na = static_cast<double>(N) + alpha;
  double v = s.value() - 2.0 * std::sqrt(na) + 0.5 / std::sqrt(na);
  // B_2k / (2k)! * (1/2)(3/2)...(1/2 + 2k - 2) * na^{1/2 - 2k},  k = 1..5
  static const double b2k[5] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
  double poch = 0.5;
  double fact = 2.0;
  double napow = std::pow(na, -1.5);
  for (int k = 1; k <= 5; ++k) {
    v += b2k[k - 1] / fact * poch * napow;
    double s0 = 0.5 + static_cast<double>(2 * k - 1);
    poch *= s0 * (s0 + 1.0);
    fact *= static_cast<double>(2 * k + 1) * static_cast<double>(2 * k + 2);
    napow /= na * na;
  }
  return v;
}

std::vector<double> hurwitz_half_table(i64 q) {
  std::vector<double> hz(static_cast<size_t>(q) + 1, 0.0);
  for (i64 a = 1; a <= q; ++a)
    hz[a] = hurwitz_zeta_half(static_cast<double>(a) / static_cast<double>(q));
  return hz;
}

// ------------------------------------------------------------ L(1/2, chi)

cplx lvalue_direct(const Character& chi, const std::vector<double>& hz) {
  if (chi.is_principal())
    throw std::invalid_argument("lvalue_direct: principal character has no L-series here");
  i64 q = chi.q();
  if (static_cast<i64>(hz.size()) != q + 1)
    throw std::invalid_argument("lvalue_direct: Hurwitz table has wrong length");
  const auto& val = chi.values();
  KahanCSum acc;
  for (i64 a = 1; a < q; ++a) {
    const cplx& c = val[a];
    if (c.real() == 0.0 && c.imag() == 0.0) continue;
    acc.add(c * hz[a]);
  }
  return acc.value() / std::sqrt(static_cast<double>(q));
}

cplx lvalue_direct(const Character& chi) {
  return lvalue_direct(chi, hurwitz_half_table(chi.q()));
}

std::vector<double> z_table(const ZKernel& zk, i64 q, double xstar) {
  i64 U = static_cast<i64>(std::ceil(static_cast<double>(q) * xstar));
  std::vector<double> zt(static_cast<size_t>(U) + 1, 0.0);
  for (i64 u = 1; u <= U; ++u)
    zt[u] = zk(static_cast<double>(u) / static_cast<double>(q));
  return zt;
}

AfeResult lvalue_sq_afe(const Character& chi, const std::vector<double>& ztab, double xstar) {
  if (!chi.is_primitive() || !chi.is_even() || chi.q() < 3)
    throw std::invalid_argument("lvalue_sq_afe: need an even primitive character, q >= 3");
  i64 q = chi.q();
  i64 U = static_cast<i64>(ztab.size()) - 1;
  const auto& val = chi.values();
  KahanCSum acc;
  i64 terms = 0;
  for (i64 m = 1; m <= U; ++m) {
    const cplx& cm = val[m % q];
    if (cm.real() == 0.0 && cm.imag() == 0.0) continue;
    for (i64 n = 1; n <= U / m; ++n) {
      const cplx& cn = val[n % q];
      if (cn.real() == 0.0 && cn.imag() == 0.0) continue;
      acc.add(cm * std::conj(cn) * (ztab[m * n] / std::sqrt(static_cast<double>(m * n))));
      ++terms;
    }
  }
  cplx two = 2.0 * acc.value();
  return {two.real(), std::abs(two.imag()), xstar, terms};
}

AfeResult lvalue_sq_afe(const Character& chi, const ZKernel& zk) {
  double xs = kernel_cutoff(zk);
  return lvalue_sq_afe(chi, z_table(zk, chi.q(), xs), xs);
}

}  // namespace mollab
