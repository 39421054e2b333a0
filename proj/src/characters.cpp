#include "mollab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mollab {

namespace {

constexpr i64 kMaxTableModulus = 200000;  // value tables are ~q per character

constexpr double kTwoPi = 6.283185307179586476925286766559;

// CRT lift: x = g mod pe, x = 1 mod (q/pe).
i64 crt_lift(i64 g, i64 pe, i64 q) {
  i64 rest = q / pe;
  if (rest == 1) return g % q;
  // x = g + pe * t with t = (1 - g) * pe^-1 mod rest
  i64 t = mulmod(((1 - g) % rest + rest) % rest, inv_mod(pe % rest, rest) % rest, rest);
  i64 x = (g + static_cast<i64>((static_cast<i128>(pe) * t) % q)) % q;
  return x;
}

}  // namespace

i64 UnitGroup::order() const {
  i64 n = 1;
  for (const auto& c : components) n *= c.order;
  return n;
}

i64 UnitGroup::exponent() const {
  i64 l = 1;
  for (const auto& c : components) l = std::lcm(l, c.order);
  return l;
}

UnitGroup unit_group(i64 q) {
  if (q <= 0) throw std::invalid_argument("unit_group: q must be positive");
  UnitGroup g;
  g.q = q;
  for (auto [p, e] : factorize(q)) {
    i64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 2) {
        g.components.push_back({crt_lift(3, pe, q), 2});
      } else if (e >= 3) {
        g.components.push_back({crt_lift(pe - 1, pe, q), 2});
        g.components.push_back({crt_lift(5, pe, q), pe / 4});
      }
      // e == 1: (Z/2)^x is trivial
    } else {
      g.components.push_back({crt_lift(primitive_root(p, e), pe, q), pe - pe / p});
    }
  }
  return g;
}

UnitStructure::UnitStructure(i64 q_in) : q(q_in) {
  if (q <= 0) throw std::invalid_argument("UnitStructure: q must be positive");
  if (q > kMaxTableModulus)
    throw std::invalid_argument("UnitStructure: q exceeds the value-table bound");
  group = unit_group(q);
  L = group.exponent();
  roots.resize(L);
  for (i64 j = 0; j < L; ++j) {
    double t = kTwoPi * static_cast<double>(j) / static_cast<double>(L);
    roots[j] = {std::cos(t), std::sin(t)};
  }
  const size_t r = group.components.size();
  comp_scale.resize(r);
  for (size_t j = 0; j < r; ++j) comp_scale[j] = L / group.components[j].order;

  // Enumerate units as products of generator powers, component 0 cycling
  // fastest, and record the discrete log of each.
  i64 phi = group.order();
  unit_list.assign(1, 1 % q);
  for (size_t j = 0; j < r; ++j) {
    const auto& c = group.components[j];
    size_t block = unit_list.size();
    unit_list.reserve(block * c.order);
    i64 gp = 1;
    for (i64 t = 1; t < c.order; ++t) {
      gp = mulmod(gp, c.generator, q);
      for (size_t i = 0; i < block; ++i)
        unit_list.push_back(static_cast<u64>(mulmod(static_cast<i64>(unit_list[i]), gp, q)));
    }
  }
  dlog.assign(static_cast<size_t>(q) * std::max<size_t>(r, 1), 0);
  if (r > 0) {
    for (i64 idx = 0; idx < phi; ++idx) {
      i64 v = idx;
      u64 u = unit_list[idx];
      for (size_t j = 0; j < r; ++j) {
        dlog[u * r + j] = static_cast<u64>(v % group.components[j].order);
        v /= group.components[j].order;
      }
    }
  }
}

i64 UnitStructure::angle(const std::vector<i64>& e, i64 u) const {
  const size_t r = group.components.size();
  i64 a = 0;
  for (size_t j = 0; j < r; ++j)
    a += e[j] * static_cast<i64>(dlog[static_cast<u64>(u) * r + j]) * comp_scale[j];
  return ((a % L) + L) % L;
}

Character::Character(std::shared_ptr<const UnitStructure> us, std::vector<i64> exponents)
    : us_(std::move(us)), exponents_(std::move(exponents)) {
  const auto& S = *us_;
  const size_t r = S.group.components.size();
  if (exponents_.size() != r)
    throw std::invalid_argument("Character: exponent vector has wrong length");
  for (size_t j = 0; j < r; ++j) {
    i64 d = S.group.components[j].order;
    exponents_[j] = ((exponents_[j] % d) + d) % d;
  }
  index_ = 0;
  for (size_t j = r; j-- > 0;) index_ = index_ * S.group.components[j].order + exponents_[j];

  // Value table, walking units in enumeration order.  An odometer step that
  // increments digit j (wrapping digits below it) changes the angle by
  // sum_{j' <= j} e_j' (L/d_j') mod L, because a full wrap of digit j'
  // contributes e_j' L = 0 mod L.
  values_.assign(static_cast<size_t>(S.q), cplx{0.0, 0.0});
  std::vector<i64> stepinc(r), counter(r, 0);
  i64 acc = 0;
  for (size_t j = 0; j < r; ++j) {
    acc = (acc + exponents_[j] * S.comp_scale[j]) % S.L;
    stepinc[j] = acc;
  }
  i64 phi = S.group.order();
  i64 a = 0;
  values_[S.unit_list[0]] = S.roots[0];
  for (i64 idx = 1; idx < phi; ++idx) {
    size_t j = 0;
    while (counter[j] + 1 == S.group.components[j].order) counter[j++] = 0;
    ++counter[j];
    a += stepinc[j];
    if (a >= S.L) a -= S.L;
    values_[S.unit_list[idx]] = S.roots[a];
  }

  even_ = S.angle(exponents_, ((S.q - 1) % S.q + S.q) % S.q) == 0;

  // Conductor: smallest f | q with chi trivial on every unit = 1 mod f.
  conductor_ = S.q;
  for (i64 f : divisors(S.q)) {
    bool trivial = true;
    for (i64 n = 1 % S.q; n < S.q; n += f) {
      if (!S.is_unit(n)) continue;
      if (S.angle(exponents_, n) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      conductor_ = f;
      break;
    }
  }
}

bool Character::is_real() const {
  const auto& comps = us_->group.components;
  for (size_t j = 0; j < comps.size(); ++j)
    if ((2 * exponents_[j]) % comps[j].order != 0) return false;
  return true;
}

i64 Character::order() const {
  const auto& comps = us_->group.components;
  i64 o = 1;
  for (size_t j = 0; j < comps.size(); ++j)
    o = std::lcm(o, comps[j].order / std::gcd(exponents_[j], comps[j].order));
  return o;
}

Character Character::conjugate() const {
  const auto& comps = us_->group.components;
  std::vector<i64> e(exponents_.size());
  for (size_t j = 0; j < e.size(); ++j)
    e[j] = (comps[j].order - exponents_[j]) % comps[j].order;
  return Character(us_, std::move(e));
}

CharacterSet enumerate_characters(i64 q) {
  CharacterSet set;
  set.q = q;
  auto us = std::make_shared<const UnitStructure>(q);
  set.structure = us;
  const auto& comps = us->group.components;
  i64 phi = us->group.order();
  set.chars.reserve(phi);
  std::vector<i64> e(comps.size(), 0);
  for (i64 idx = 0; idx < phi; ++idx) {
    set.chars.emplace_back(us, e);
    for (size_t j = 0; j < comps.size(); ++j) {
      if (++e[j] < comps[j].order) break;
      e[j] = 0;
    }
  }
  return set;
}

i64 phi_star(i64 q) {
  i64 s = 0;
  for (i64 k : divisors(q)) s += euler_phi(k) * mobius(q / k);
  return s;
}

std::vector<cplx> unity_table(i64 q) {
  std::vector<cplx> eq(q);
  for (i64 h = 0; h < q; ++h) {
    double t = kTwoPi * static_cast<double>(h) / static_cast<double>(q);
    eq[h] = {std::cos(t), std::sin(t)};
  }
  return eq;
}

cplx gauss_sum(const Character& chi, const std::vector<cplx>& eq) {
  const auto& S = chi.structure();
  const auto& val = chi.values();
  cplx tau{0.0, 0.0};
  for (u64 u : S.unit_list) tau += val[u] * eq[u];
  return tau;
}

cplx gauss_sum(const Character& chi) { return gauss_sum(chi, unity_table(chi.q())); }

cplx epsilon_chi(const Character& chi) {
  if (!chi.is_primitive())
    throw std::invalid_argument("epsilon_chi: character is not primitive");
  return gauss_sum(chi) / std::sqrt(static_cast<double>(chi.q()));
}

OrthogonalityCheck even_orthogonality(const CharacterSet& set, i64 m, i64 n) {
  i64 q = set.q;
  if (gcd64(((m % q) + q) % q, q) != 1 || gcd64(((n % q) + q) % q, q) != 1)
    throw std::invalid_argument("even_orthogonality: m, n must be coprime to q");
  cplx lhs{0.0, 0.0};
  for (const auto& chi : set.chars)
    if (chi.is_even() && chi.is_primitive()) lhs += chi(m) * std::conj(chi(n));
  double rhs = 0.0;
  for (i64 w : divisors(q)) {
    i64 v = q / w;
    int mv = mobius(v);
    if (mv == 0) continue;
    double term = 0.5 * mv * static_cast<double>(euler_phi(w));
    if ((m - n) % w == 0) rhs += term;
    if ((m + n) % w == 0) rhs += term;
  }
  return {lhs.real(), rhs};
}

OrthogonalityCheck even_orthogonality(i64 q, i64 m, i64 n) {
  return even_orthogonality(enumerate_characters(q), m, n);
}

}  // namespace mollab
