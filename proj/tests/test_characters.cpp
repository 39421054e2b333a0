#include <cmath>
#include <map>

#include "doctest.h"
#include "mollab/characters.hpp"
#include "test_rng.hpp"

using namespace mollab;

TEST_SUITE_BEGIN("characters");

TEST_CASE("unit group decomposition matches the classical shapes") {
  CHECK(unit_group(1).components.empty());
  CHECK(unit_group(2).components.empty());

  auto g4 = unit_group(4);
  REQUIRE(g4.components.size() == 1);
  CHECK(g4.components[0].order == 2);

  auto g5 = unit_group(5);
  REQUIRE(g5.components.size() == 1);
  CHECK(g5.components[0].order == 4);

  auto g8 = unit_group(8);
  REQUIRE(g8.components.size() == 2);
  CHECK(g8.components[0].order == 2);
  CHECK(g8.components[1].order == 2);

  auto g16 = unit_group(16);
  REQUIRE(g16.components.size() == 2);
  CHECK(g16.components[0].order == 2);
  CHECK(g16.components[1].order == 4);

  // product of component orders is phi(q), for a spread of q
  for (i64 q = 1; q <= 500; ++q) CHECK(unit_group(q).order() == euler_phi(q));
}

TEST_CASE("unit enumeration is a bijection onto the units") {
  for (i64 q : {1, 2, 3, 4, 8, 12, 30, 81, 240, 1009}) {
    UnitStructure S(q);
    CHECK(static_cast<i64>(S.unit_list.size()) == euler_phi(q));
    std::vector<char> seen(q, 0);
    for (u64 u : S.unit_list) {
      CHECK(S.is_unit(static_cast<i64>(u)));
      CHECK(!seen[u]);
      seen[u] = 1;
    }
  }
}

TEST_CASE("characters are multiplicative and unimodular on units") {
  TestRng rng(2026);
  for (i64 q : {3, 5, 8, 12, 35, 72, 100, 243}) {
    auto set = enumerate_characters(q);
    CHECK(static_cast<i64>(set.chars.size()) == euler_phi(q));
    for (int trial = 0; trial < 40; ++trial) {
      const auto& chi = set.chars[rng.range(0, set.chars.size() - 1)];
      i64 m = rng.range(1, 10 * q), n = rng.range(1, 10 * q);
      if (std::gcd(m, q) != 1 || std::gcd(n, q) != 1) {
        CHECK(std::abs(chi(m * n)) * std::abs(chi(m)) * std::abs(chi(n)) == 0.0);
        continue;
      }
      CHECK(std::abs(chi(m)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-12);
    }
    // principal character is 1 on units
    for (u64 u : set.structure->unit_list) CHECK(set.chars[0](u) == cplx{1.0, 0.0});
  }
}

TEST_CASE("conductor: known values and divisor histogram") {
  // quadratic character mod an odd prime has conductor p
  for (i64 p : {3, 5, 7, 11, 13}) {
    auto set = enumerate_characters(p);
    int found = 0;
    for (const auto& chi : set.chars)
      if (!chi.is_principal() && chi.is_real()) {
        CHECK(chi.conductor() == p);
        ++found;
      }
    CHECK(found == 1);
  }
  // mod 12 there is a character induced from the nontrivial character mod 3
  {
    auto set = enumerate_characters(12);
    bool saw3 = false;
    for (const auto& chi : set.chars) saw3 |= (chi.conductor() == 3);
    CHECK(saw3);
  }
  // principal character always has conductor 1, and every conductor divides q;
  // the number of characters of conductor f equals phi_star(f)
  for (i64 q : {1, 2, 9, 24, 45, 60, 128}) {
    auto set = enumerate_characters(q);
    CHECK(set.chars[0].conductor() == 1);
    std::map<i64, i64> hist;
    for (const auto& chi : set.chars) {
      CHECK(q % chi.conductor() == 0);
      hist[chi.conductor()]++;
    }
    for (i64 f : divisors(q)) {
      i64 expect = phi_star(f);
      i64 got = hist.count(f) ? hist[f] : 0;
      CHECK(got == expect);
    }
  }
}

TEST_CASE("phi_star: frozen values and brute-force primitive count") {
  CHECK(phi_star(1) == 1);
  CHECK(phi_star(2) == 0);
  CHECK(phi_star(3) == 1);
  CHECK(phi_star(4) == 1);
  CHECK(phi_star(8) == 2);
  for (i64 p : {5, 7, 11, 31}) CHECK(phi_star(p) == p - 2);
  for (i64 q = 1; q <= 200; ++q) {
    auto set = enumerate_characters(q);
    i64 prim = 0;
    for (const auto& chi : set.chars) prim += chi.is_primitive();
    CHECK(prim == phi_star(q));
  }
}

TEST_CASE("parity splits the dual group in half for q > 2") {
  for (i64 q = 3; q <= 120; ++q) {
    auto set = enumerate_characters(q);
    i64 even = 0;
    for (const auto& chi : set.chars) even += chi.is_even();
    CHECK(2 * even == euler_phi(q));
  }
  // q = 1, 2: only the (even) principal character
  CHECK(enumerate_characters(1).chars[0].is_even());
  CHECK(enumerate_characters(2).chars[0].is_even());
}

TEST_CASE("conjugate and order behave as dual-group operations") {
  TestRng rng(7);
  for (i64 q : {5, 8, 21, 40, 100}) {
    auto set = enumerate_characters(q);
    for (const auto& chi : set.chars) {
      auto bar = chi.conjugate();
      CHECK(bar.conductor() == chi.conductor());
      CHECK(bar.is_even() == chi.is_even());
      i64 m = rng.range(1, q);
      CHECK(std::abs(bar(m) - std::conj(chi(m))) < 1e-12);
      CHECK(chi.order() >= 1);
      CHECK((chi.order() <= 2) == chi.is_real());
    }
  }
}

TEST_CASE("gauss sums: principal mod p gives -1, quadratic mod 5 gives sqrt 5") {
  auto set5 = enumerate_characters(5);
  // character with chi(2) = i has index found by scanning; quadratic one is real
  const Character* quad = nullptr;
  for (const auto& chi : set5.chars)
    if (!chi.is_principal() && chi.is_real()) quad = &chi;
  REQUIRE(quad != nullptr);
  cplx tau = gauss_sum(*quad);
  CHECK(std::abs(tau - cplx{std::sqrt(5.0), 0.0}) < 1e-12);
  CHECK(std::abs(epsilon_chi(*quad) - cplx{1.0, 0.0}) < 1e-12);

  for (i64 p : {3, 7, 11, 13}) {
    auto set = enumerate_characters(p);
    CHECK(std::abs(gauss_sum(set.chars[0]) - cplx{-1.0, 0.0}) < 1e-11);
  }
}

TEST_CASE("epsilon has unit modulus exactly for primitive characters") {
  for (i64 q = 3; q <= 60; ++q) {
    auto set = enumerate_characters(q);
    for (const auto& chi : set.chars) {
      if (chi.is_primitive()) {
        CHECK(std::abs(std::abs(epsilon_chi(chi)) - 1.0) < 1e-11);
      } else {
        CHECK_THROWS_AS(epsilon_chi(chi), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("even-primitive orthogonality: frozen examples") {
  auto c1 = even_orthogonality(1, 1, 1);
  CHECK(c1.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c1.rhs == doctest::Approx(1.0).epsilon(1e-12));

  auto c5 = even_orthogonality(5, 2, 3);
  CHECK(c5.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(c5.rhs == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(even_orthogonality(6, 2, 1), std::invalid_argument);
}

TEST_CASE("even-primitive orthogonality: random sweep") {
  TestRng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    i64 q = rng.range(1, 60);
    i64 m = rng.range(1, 30), n = rng.range(1, 30);
    if (std::gcd(m, q) != 1 || std::gcd(n, q) != 1) continue;
    auto set = enumerate_characters(q);
    auto c = even_orthogonality(set, m, n);
    CHECK(std::abs(c.lhs - c.rhs) < 1e-9);
  }
}

// The Gauss-sum-weighted version of orthogonality: summing epsilon(chi)
// chi(a) conj(chi(n)) over even primitive chi equals a cosine sum over
// coprime factorizations q = vw with v squarefree,
//   q^{-1/2} sum_{vw=q, (v,w)=1} mu^2(v) phi(w) cos(2 pi n avbar / w),
// where avbar inverts av mod w.  Exercises gauss_sum, conductor, parity and
// the CRT structure together.
TEST_CASE("gauss-sum weighted orthogonality identity") {
  for (i64 q : {3, 4, 5, 6, 7, 8, 9, 12, 15, 16, 21, 24, 36, 40}) {
    auto set = enumerate_characters(q);
    for (i64 a : {1, 2, 5}) {
      for (i64 n : {1, 3, 7}) {
        if (std::gcd(a, q) != 1 || std::gcd(n, q) != 1) continue;
        cplx lhs{0.0, 0.0};
        for (const auto& chi : set.chars)
          if (chi.is_even() && chi.is_primitive())
            lhs += epsilon_chi(chi) * chi(a) * std::conj(chi(n));
        double rhs = 0.0;
        for (i64 w : divisors(q)) {
          i64 v = q / w;
          if (mobius(v) == 0 || std::gcd(v, w) != 1) continue;
          i64 inv = inv_mod(a * v, w) % w;
          rhs += static_cast<double>(euler_phi(w)) *
                 std::cos(2.0 * M_PI * static_cast<double>(n * inv) / static_cast<double>(w));
        }
        rhs /= std::sqrt(static_cast<double>(q));
        CHECK(std::abs(lhs.imag()) < 1e-10);
        CHECK(std::abs(lhs.real() - rhs) < 1e-9);
      }
    }
  }
}

TEST_SUITE_END();
