#include <cmath>

#include "doctest.h"
#include "mollab/expsums.hpp"
#include "test_rng.hpp"

using namespace mollab;

namespace {

// Independent Kloosterman oracle: brute-force inverse by scanning, per-term
// trig through std::polar, plain running sum.  Deliberately shares no code
// with the library path.
cplx kloosterman_oracle(long long m, long long n, long long c) {
  if (c == 1) return {1.0, 0.0};
  cplx s{0.0, 0.0};
  for (long long x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    long long xbar = 0;
    for (long long t = 1; t < c; ++t)
      if ((x * t) % c == 1) {
        xbar = t;
        break;
      }
    double ang = 2.0 * M_PI * (static_cast<double>(((m % c) + c) % c) * x +
                               static_cast<double>(((n % c) + c) % c) * xbar) /
                 static_cast<double>(c);
    s += std::polar(1.0, ang);
  }
  return s;
}

long long divisor_count(long long n) {
  long long d = 0;
  for (long long i = 1; i * i <= n; ++i)
    if (n % i == 0) d += (i * i == n) ? 1 : 2;
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("expsums");

TEST_CASE("kloosterman: frozen small values") {
  CHECK(std::abs(kloosterman(1, 1, 1) - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(kloosterman(1, 1, 2) - cplx{1.0, 0.0}) < 1e-12);
  // S(1,1;5) = 2 + 2 cos(4 pi / 5)
  double expect = 2.0 + 2.0 * std::cos(4.0 * M_PI / 5.0);
  CHECK(kloosterman(1, 1, 5).real() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("kloosterman: real, symmetric, oracle-checked") {
  TestRng rng(101);
  for (int trial = 0; trial < 250; ++trial) {
    i64 c = rng.range(1, 120);
    i64 m = rng.range(-50, 50), n = rng.range(-50, 50);
    cplx v = kloosterman(m, n, c);
    CHECK(std::abs(v.imag()) < 1e-9);
    CHECK(std::abs(v - kloosterman(n, m, c)) < 1e-10);
    CHECK(std::abs(v - kloosterman_oracle(m, n, c)) < 1e-9);
    // Weil-type envelope as a sanity rail
    i64 g = std::gcd(std::gcd(std::abs(m), std::abs(n)), c);
    if (g == 0) g = c;
    CHECK(std::abs(v) <=
          static_cast<double>(divisor_count(c)) * std::sqrt(static_cast<double>(g)) *
                  std::sqrt(static_cast<double>(c)) +
              1e-9);
  }
}

TEST_CASE("ramanujan: frozen value, Holder closed form, gcd bound") {
  CHECK(ramanujan(6, 2) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ramanujan(1, 0) == doctest::Approx(1.0));
  for (i64 w = 1; w <= 60; ++w) {
    for (i64 k = 0; k <= 60; ++k) {
      double v = ramanujan(w, k);
      i64 g = (k == 0) ? w : std::gcd(k, w);
      double closed = mobius(w / g) * static_cast<double>(euler_phi(w)) /
                      static_cast<double>(euler_phi(w / g));
      CHECK(v == doctest::Approx(closed).epsilon(1e-9).scale(1.0));
      CHECK(std::abs(v) <= static_cast<double>(g) + 1e-9);
      // integer-valued
      CHECK(std::abs(v - std::round(v)) < 1e-9);
    }
  }
}

TEST_CASE("reciprocity defect: frozen values and the mod-1 identity") {
  CHECK(reciprocity_defect(3, 5) == 1);
  CHECK(reciprocity_defect(2, 7) == 1);
  CHECK(reciprocity_defect(1, 1) == 1);
  CHECK_THROWS_AS(reciprocity_defect(6, 9), std::invalid_argument);
  TestRng rng(55);
  for (int trial = 0; trial < 400; ++trial) {
    i64 x = rng.range(1, 1000), y = rng.range(1, 1000);
    if (std::gcd(x, y) != 1) continue;
    i64 d = reciprocity_defect(x, y);
    CHECK(d == reciprocity_defect(y, x));
    // xbar/y + ybar/x - 1/(xy) is exactly the defect
    double xbar = static_cast<double>(inv_mod(x, y));
    double ybar = static_cast<double>(inv_mod(y, x));
    double lhs = xbar / y + ybar / x - 1.0 / (static_cast<double>(x) * y);
    CHECK(lhs == doctest::Approx(static_cast<double>(d)).epsilon(1e-9));
  }
}

TEST_CASE("bilinear envelope: frozen values and monotonicity in q") {
  DIParams unit;  // all ones
  CHECK(di_bound(unit) == doctest::Approx(std::sqrt(5.0 + std::sqrt(2.0))).epsilon(1e-14));

  DIParams p{.C = 2, .D = 3, .N = 4, .R = 5, .S = 1, .q = 1};
  double expect = std::sqrt(2 * 1 * (5 + 4) * (2 + 15) + 4.0 * 3 * 1 * std::sqrt((5.0 + 4) * 5) +
                            9.0 * 4 * 5);
  CHECK(di_bound(p) == doctest::Approx(expect).epsilon(1e-14));

  double prev = 0.0;
  for (i64 q = 1; q <= 50; ++q) {
    DIParams pq = p;
    pq.q = q;
    double k = di_bound(pq);
    CHECK(k > prev);
    prev = k;
  }
  CHECK_THROWS_AS(di_bound(DIParams{.C = 0}), std::invalid_argument);
}

TEST_CASE("quintuple sum matches a literal five-loop reference") {
  TestRng rng(404);
  for (int instance = 0; instance < 30; ++instance) {
    DIParams p;
    p.C = rng.range(1, 16);
    p.D = rng.range(1, 16);
    p.N = rng.range(1, 24);
    p.R = rng.range(1, 12);
    p.S = rng.range(1, 12);
    p.q = rng.range(1, 4);
    i64 c0 = rng.range(0, p.q - 1), d0 = rng.range(0, p.q - 1);

    DICoefficients b;
    int support = static_cast<int>(rng.range(1, 6));
    for (int i = 0; i < support; ++i) {
      DITriple t;
      t.n = rng.range(1, static_cast<i64>(p.N));
      t.r = rng.range(static_cast<i64>(p.R) + 1, static_cast<i64>(2 * p.R));
      t.s = rng.range(static_cast<i64>(p.S) + 1, static_cast<i64>(2 * p.S));
      b.entries.emplace_back(t, rng.real01() * 2.0 - 1.0);
    }
    auto g = [](i64 c, i64 d, i64 n, i64 r, i64 s) {
      return 1.0 / (1.0 + 0.01 * static_cast<double>(c + d + n + r + s));
    };
    auto fast = di_quintuple_sum(p, b, g, c0, d0);

    // literal reference: five nested loops, inverse by Euler's theorem
    cplx ref{0.0, 0.0};
    for (const auto& [t, coeff] : b.entries) {
      for (i64 c = static_cast<i64>(std::ceil(p.C)); c <= static_cast<i64>(2 * p.C); ++c) {
        if (((c - c0) % p.q + p.q) % p.q != 0) continue;
        for (i64 d = static_cast<i64>(std::ceil(p.D)); d <= static_cast<i64>(2 * p.D); ++d) {
          if (((d - d0) % p.q + p.q) % p.q != 0) continue;
          i64 sc = t.s * c;
          i64 qrd = p.q * t.r * d;
          bool coprime = true;
          for (i64 f = 2; f <= sc; ++f)
            if (sc % f == 0 && qrd % f == 0) {
              coprime = false;
              break;
            }
          if (!coprime) continue;
          i64 inv = (sc == 1) ? 0 : powmod(t.r * d % sc, euler_phi(sc) - 1, sc);
          double ang = 2.0 * M_PI * static_cast<double>((t.n * inv) % sc) /
                       static_cast<double>(sc);
          ref += coeff * g(c, d, t.n, t.r, t.s) * std::polar(1.0, ang);
        }
      }
    }
    double scale = std::max(1.0, std::abs(ref));
    CHECK(std::abs(fast.sum - ref) / scale < 1e-9);
    CHECK(fast.ratio >= 0.0);
    CHECK(fast.k_bound > 0.0);
  }

  // empty coefficients give the zero sum with a zero ratio
  DICoefficients empty;
  auto z = di_quintuple_sum(DIParams{}, empty,
                            [](i64, i64, i64, i64, i64) { return 1.0; }, 0, 0);
  CHECK(std::abs(z.sum) == 0.0);
  CHECK(z.ratio == 0.0);
}

TEST_SUITE_END();
