#include "mollab/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mollab/kahan.hpp"

namespace mollab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr i64 kMaxScProduct = i64{1} << 40;

inline cplx unit_phase(i64 num, i64 den) {
  // e(num/den) with num already reduced into [0, den)
  double t = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}
}  // namespace

cplx kloosterman(i64 m, i64 n, i64 c) {
  if (c <= 0) throw std::invalid_argument("kloosterman: c must be positive");
  if (c > (i64{1} << 22))
    throw std::invalid_argument("kloosterman: c too large for the direct sum");
  if (c == 1) return {1.0, 0.0};
  i64 mr = ((m % c) + c) % c, nr = ((n % c) + c) % c;
  KahanCSum acc;
  for (i64 x = 1; x < c; ++x) {
    if (gcd64(x, c) != 1) continue;
    i64 xbar = inv_mod(x, c) % c;
    i64 num = static_cast<i64>((static_cast<i128>(mr) * x + static_cast<i128>(nr) * xbar) % c);
    acc.add(unit_phase(num, c));
  }
  return acc.value();
}

double ramanujan(i64 w, i64 k) {
  if (w <= 0) throw std::invalid_argument("ramanujan: w must be positive");
  if (w == 1) return 1.0;
  i64 kr = ((k % w) + w) % w;
  KahanCSum acc;
  for (i64 b = 1; b < w; ++b) {
    if (gcd64(b, w) != 1) continue;
    acc.add(unit_phase(static_cast<i64>((static_cast<i128>(b) * kr) % w), w));
  }
  return acc.value().real();
}

i64 reciprocity_defect(i64 x, i64 y) {
  if (x <= 0 || y <= 0)
    throw std::invalid_argument("reciprocity_defect: x, y must be positive");
  if (gcd64(x, y) != 1)
    throw std::invalid_argument("reciprocity_defect: x, y must be coprime");
  i64 xbar = inv_mod(x, y);  // in [1, y]
  i64 ybar = inv_mod(y, x);  // in [1, x]
  i128 num = static_cast<i128>(xbar) * x + static_cast<i128>(ybar) * y - 1;
  i128 den = static_cast<i128>(x) * y;
  if (num % den != 0)
    throw std::logic_error("reciprocity_defect: congruence bookkeeping failed");
  return static_cast<i64>(num / den);
}

double di_bound(const DIParams& p) {
  if (p.C <= 0 || p.D <= 0 || p.N <= 0 || p.R <= 0 || p.S <= 0 || p.q < 1)
    throw std::invalid_argument("di_bound: all ranges must be positive, q >= 1");
  double rsn = p.R * p.S + p.N;
  double k2 = static_cast<double>(p.q) * p.C * p.S * rsn * (p.C + p.R * p.D) +
              p.C * p.C * p.D * p.S * std::sqrt(rsn * p.R) + p.D * p.D * p.N * p.R;
  return std::sqrt(k2);
}

double DICoefficients::l2_norm() const {
  KahanSum s;
  for (const auto& [t, b] : entries) s.add(b * b);
  return std::sqrt(s.value());
}

DIQuintupleResult di_quintuple_sum(const DIParams& p, const DICoefficients& b,
                                   const DIAmplitude& g, i64 c0, i64 d0) {
  if (p.q < 1) throw std::invalid_argument("di_quintuple_sum: q must be >= 1");
  // validate the support box and group by (r, s) so the modular inverse is
  // computed once per (r, s, c, d)
  std::map<std::pair<i64, i64>, std::vector<std::pair<i64, double>>> by_rs;
  for (const auto& [t, coeff] : b.entries) {
    if (!(t.n >= 1 && static_cast<double>(t.n) <= p.N))
      throw std::invalid_argument("di_quintuple_sum: n outside (0, N]");
    if (!(static_cast<double>(t.r) > p.R && static_cast<double>(t.r) <= 2 * p.R))
      throw std::invalid_argument("di_quintuple_sum: r outside (R, 2R]");
    if (!(static_cast<double>(t.s) > p.S && static_cast<double>(t.s) <= 2 * p.S))
      throw std::invalid_argument("di_quintuple_sum: s outside (S, 2S]");
    by_rs[{t.r, t.s}].emplace_back(t.n, coeff);
  }
  for (auto& [rs, ns] : by_rs) std::sort(ns.begin(), ns.end());

  i64 c_lo = static_cast<i64>(std::ceil(p.C)), c_hi = static_cast<i64>(std::floor(2 * p.C));
  i64 d_lo = static_cast<i64>(std::ceil(p.D)), d_hi = static_cast<i64>(std::floor(2 * p.D));
  KahanCSum acc;
  for (const auto& [rs, ns] : by_rs) {
    auto [r, s] = rs;
    for (i64 c = c_lo; c <= c_hi; ++c) {
      if (((c - c0) % p.q + p.q) % p.q != 0) continue;
      i64 sc = s * c;
      if (sc >= kMaxScProduct)
        throw std::invalid_argument("di_quintuple_sum: s*c exceeds the 2^40 guard");
      for (i64 d = d_lo; d <= d_hi; ++d) {
        if (((d - d0) % p.q + p.q) % p.q != 0) continue;
        i128 qrd = static_cast<i128>(p.q) * r * d;
        i64 qrd_mod = static_cast<i64>(qrd % sc);
        if (sc != 1 && gcd64(qrd_mod, sc) != 1) continue;
        i64 rd_mod = static_cast<i64>((static_cast<i128>(r) * d) % sc);
        i64 inv = inv_mod(rd_mod, sc) % sc;
        for (const auto& [n, coeff] : ns) {
          double amp = coeff * g(c, d, n, r, s);
          if (amp == 0.0) continue;
          i64 num = static_cast<i64>((static_cast<i128>(n) * inv) % sc);
          acc.add(amp * unit_phase(num, sc));
        }
      }
    }
  }
  DIQuintupleResult out;
  out.sum = acc.value();
  out.k_bound = di_bound(p);
  out.b_norm = b.l2_norm();
  double denom = out.k_bound * out.b_norm;
  out.ratio = denom > 0 ? std::abs(out.sum) / denom : 0.0;
  return out;
}

}  // namespace mollab
