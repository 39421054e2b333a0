#pragma once
// Elementary number-theoretic plumbing shared by every module: modular
// inverses, power maps, factorization by trial division (fine at desk scale),
// and linear sieves for mu/phi/smallest-prime-factor up to a few million.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mollab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

// a*b mod m without overflow for m < 2^62.
inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(a) * b) % m);
}

i64 powmod(i64 base, i64 exp, i64 mod);

// Inverse of a mod m, normalized to [1, m]: for m == 1 the representative of
// the zero class is taken as 1, which is what the reciprocity bookkeeping
// below expects.  Throws if gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 euler_phi(i64 n);
int mobius(i64 n);
std::vector<i64> divisors(i64 n);  // ascending

// Smallest generator of (Z/p^k)^x for odd prime p.
i64 primitive_root(i64 p, int k);

// Linear sieve holding mu, phi and smallest prime factor for 1..n.
struct ArithTable {
  explicit ArithTable(i64 n);
  i64 limit;
  std::vector<int> mu;
  std::vector<i64> phi;
  std::vector<i64> spf;
};

}  // namespace mollab
