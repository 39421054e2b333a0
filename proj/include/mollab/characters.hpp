#pragma once
// Dirichlet characters mod q, built from the cyclic decomposition of the unit
// group (Z/q)^x.
//
//   (Z/2)^x   trivial            (Z/4)^x   = <3>, order 2
//   (Z/2^k)^x = <-1> x <5>,      orders 2 and 2^(k-2)        (k >= 3)
//   (Z/p^k)^x = <g>,             order p^(k-1)(p-1),  p odd prime
//
// and CRT-combined for composite q.  A character is an exponent vector
// against the component generators; its value at a unit n with discrete log
// (v_1,...,v_r) is e(sum_j e_j v_j / d_j).  All values are read from a single
// table of e(j/L) for the group exponent L, so every character value is a
// root of unity computed from one sin/cos call -- no accumulated drift, and
// equality tests (conductor, parity) run on exact integer angles.
//
// Enumeration order: character index is the little-endian mixed-radix
// encoding of the exponent vector, so index 0 is the principal character and
// the order is deterministic.  Conductor is found by brute force over
// divisors f | q: the smallest f such that chi is trivial on units = 1 mod f.
// The number of primitive characters equals phistar(q) = sum_{k|q} phi(k)
// mu(q/k), which the tests check against that brute force.

#include <complex>
#include <memory>
#include <vector>

#include "mollab/arith.hpp"

namespace mollab {

using cplx = std::complex<double>;

struct CyclicComponent {
  i64 generator;  // global generator (CRT-lifted), 1 on other prime powers
  i64 order;
};

struct UnitGroup {
  i64 q = 1;
  std::vector<CyclicComponent> components;
  i64 order() const;     // phi(q)
  i64 exponent() const;  // lcm of component orders (1 for the trivial group)
};

UnitGroup unit_group(i64 q);

// Per-modulus data shared by every character mod q: unit enumeration in
// odometer order, discrete logs, and the e(j/L) root table.
struct UnitStructure {
  i64 q;
  UnitGroup group;
  i64 L;                        // group exponent
  std::vector<cplx> roots;      // roots[j] = e(j/L)
  std::vector<i64> comp_scale;  // L / d_j per component
  std::vector<u64> unit_list;   // units in enumeration order, phi(q) entries
  std::vector<u64> dlog;        // flattened: dlog[u*r + j], r = #components;
                                // valid only at unit residues u
  explicit UnitStructure(i64 q);
  bool is_unit(i64 n) const {
    i64 r = ((n % q) + q) % q;
    return gcd64(r, q) == 1;  // q = 1: gcd(0,1) = 1, every residue is a unit
  }
  // Integer angle of the character with exponents e at unit residue u,
  // as a multiple of 1/L.
  i64 angle(const std::vector<i64>& e, i64 u) const;
};

class Character {
 public:
  Character(std::shared_ptr<const UnitStructure> us, std::vector<i64> exponents);

  i64 q() const { return us_->q; }
  i64 index() const { return index_; }
  const std::vector<i64>& exponents() const { return exponents_; }
  i64 conductor() const { return conductor_; }
  bool is_even() const { return even_; }
  bool is_primitive() const { return conductor_ == us_->q; }
  bool is_principal() const { return index_ == 0; }
  bool is_real() const;
  i64 order() const;  // order in the dual group

  // Value table of length q; zero at non-unit residues.
  const std::vector<cplx>& values() const { return values_; }
  cplx operator()(i64 n) const {
    i64 r = n % q();
    if (r < 0) r += q();
    return values_[static_cast<size_t>(r)];
  }

  Character conjugate() const;
  const UnitStructure& structure() const { return *us_; }

 private:
  std::shared_ptr<const UnitStructure> us_;
  std::vector<i64> exponents_;
  i64 index_;
  i64 conductor_;
  bool even_;
  std::vector<cplx> values_;
};

struct CharacterSet {
  i64 q;
  std::shared_ptr<const UnitStructure> structure;
  std::vector<Character> chars;  // index order, chars[0] principal
};

CharacterSet enumerate_characters(i64 q);

// Number of primitive characters mod q: sum_{k|q} phi(k) mu(q/k).
i64 phi_star(i64 q);

// tau(chi) = sum_h chi(h) e(h/q).  The overload taking a precomputed e(h/q)
// table exists because the census loops call this once per character.
cplx gauss_sum(const Character& chi);
cplx gauss_sum(const Character& chi, const std::vector<cplx>& eq);
std::vector<cplx> unity_table(i64 q);  // e(h/q), h = 0..q-1

// epsilon(chi) = tau(chi)/sqrt(q); unit modulus for primitive chi (throws on
// non-primitive input, where the normalization is meaningless).
cplx epsilon_chi(const Character& chi);

// Both sides of the even-primitive orthogonality identity
//   sum_{chi even primitive mod q} chi(m) conj(chi(n))
//     = 1/2 sum_{vw=q, w | m-n} mu(v) phi(w)  +  1/2 sum_{vw=q, w | m+n} mu(v) phi(w)
// with "w | 0" true for every w.  Requires gcd(mn, q) = 1.
struct OrthogonalityCheck {
  double lhs;
  double rhs;
};
OrthogonalityCheck even_orthogonality(i64 q, i64 m, i64 n);
OrthogonalityCheck even_orthogonality(const CharacterSet& set, i64 m, i64 n);

}  // namespace mollab
