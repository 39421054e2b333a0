#include "doctest.h"
#include "mollab/arith.hpp"

using namespace mollab;

TEST_SUITE_BEGIN("arith");

TEST_CASE("inverse normalization and edge cases") {
  CHECK(inv_mod(3, 5) == 2);
  CHECK(inv_mod(2, 7) == 4);
  CHECK(inv_mod(7, 2) == 1);
  CHECK(inv_mod(1, 1) == 1);  // mod 1 the class of 0 is represented by 1
  CHECK(inv_mod(5, 1) == 1);
  CHECK_THROWS_AS(inv_mod(2, 4), std::invalid_argument);
  for (i64 m = 2; m <= 50; ++m)
    for (i64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      i64 v = inv_mod(a, m);
      CHECK(v >= 1);
      CHECK(v <= m);
      CHECK((a * v) % m == 1 % m);
    }
}

TEST_CASE("powmod against repeated multiplication") {
  for (i64 m : {2, 3, 7, 97, 1000}) {
    for (i64 b = 0; b < 12; ++b) {
      i64 naive = 1 % m;
      for (i64 e = 0; e <= 20; ++e) {
        CHECK(powmod(b, e, m) == naive);
        naive = (naive * b) % m;
      }
    }
  }
}

TEST_CASE("factorize, phi, mu, divisors agree with sieve") {
  ArithTable tab(2000);
  for (i64 n = 1; n <= 2000; ++n) {
    CHECK(euler_phi(n) == tab.phi[n]);
    CHECK(mobius(n) == tab.mu[n]);
    i64 back = 1;
    for (auto [p, e] : factorize(n))
      for (int i = 0; i < e; ++i) back *= p;
    CHECK(back == n);
  }
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<i64>{1});
  // phi is the divisor-transform inverse of the identity: sum_{d|n} phi(d) = n
  for (i64 n : {1, 2, 30, 360, 1024, 1999}) {
    i64 s = 0;
    for (i64 d : divisors(n)) s += euler_phi(d);
    CHECK(s == n);
  }
}

TEST_CASE("primitive roots generate the full unit group") {
  for (auto [p, k] : std::vector<std::pair<i64, int>>{
           {3, 1}, {3, 2}, {5, 1}, {5, 3}, {7, 2}, {11, 1}, {13, 2}, {101, 1}}) {
    i64 pe = 1;
    for (int i = 0; i < k; ++i) pe *= p;
    i64 g = primitive_root(p, k);
    i64 phi = euler_phi(pe);
    // order of g must be exactly phi
    std::vector<char> seen(pe, 0);
    i64 x = 1 % pe;
    for (i64 i = 0; i < phi; ++i) {
      CHECK(!seen[x]);
      seen[x] = 1;
      x = mulmod(x, g, pe);
    }
    CHECK(x == 1 % pe);
  }
}

TEST_SUITE_END();
