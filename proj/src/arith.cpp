#include "mollab/arith.hpp"

#include <algorithm>

namespace mollab {

i64 powmod(i64 base, i64 exp, i64 mod) {
  if (mod <= 0) throw std::invalid_argument("powmod: modulus must be positive");
  if (mod == 1) return 0;
  i64 r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 m) {
  if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
  if (m == 1) return 1;
  i64 r0 = m, r1 = ((a % m) + m) % m;
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i64 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  return t0 < 0 ? t0 + m : (t0 == 0 ? m : t0);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<i64, int>> f;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

int mobius(i64 n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> d{1};
  for (auto [p, e] : factorize(n)) {
    size_t k = d.size();
    i64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < k; ++j) d.push_back(d[j] * pe);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

i64 primitive_root(i64 p, int k) {
  if (p == 2) throw std::invalid_argument("primitive_root: p must be odd");
  // Find a generator mod p by checking g^((p-1)/q) != 1 for each prime q | p-1.
  auto fac = factorize(p - 1);
  i64 g = 0;
  for (i64 c = 2; c < p; ++c) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(c, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = c;
      break;
    }
  }
  if (g == 0) throw std::logic_error("primitive_root: search failed");
  if (k == 1) return g;
  // g generates mod p^k for all k >= 2 iff g^(p-1) != 1 mod p^2; otherwise g+p works.
  if (powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

ArithTable::ArithTable(i64 n) : limit(n), mu(n + 1, 0), phi(n + 1, 0), spf(n + 1, 0) {
  mu[1] = 1;
  phi[1] = 1;
  spf[1] = 1;
  std::vector<i64> primes;
  for (i64 i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      mu[i] = -1;
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (i64 p : primes) {
      if (p > spf[i] || i * p > n) break;
      spf[i * p] = p;
      if (i % p == 0) {
        mu[i * p] = 0;
        phi[i * p] = phi[i] * p;
      } else {
        mu[i * p] = -mu[i];
        phi[i * p] = phi[i] * (p - 1);
      }
    }
  }
}

}  // namespace mollab
