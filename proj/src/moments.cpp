#include "mollab/moments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "mollab/errors.hpp"
#include "mollab/lvalue.hpp"

namespace mollab {

namespace {

ModulusRow per_modulus(i64 q, const WeightConfig& cfg, const MollifierSpec* spec,
                       const ArithTable* tab, double tau_nv, LValueSource* cache) {
  ModulusRow row;
  row.q = q;
  {
    double t = static_cast<double>(q) / cfg.Q;
    row.weight = psi_bump(t) * h_tent(cfg.T(), t) * static_cast<double>(q) /
                 static_cast<double>(euler_phi(q));
  }
  CharacterSet set = enumerate_characters(q);
  std::vector<double> hz = hurwitz_half_table(q);
  KahanCSum s1;
  KahanSum s2;
  for (const Character& chi : set.chars) {
    if (chi.is_principal() || !chi.is_primitive()) continue;
    cplx L;
    bool have = false;
    if (cache) {
      if (auto hit = cache->lookup(q, chi.index())) {
        L = *hit;
        have = true;
      }
    }
    if (!have) {
      try {
        L = lvalue_direct(chi, hz);
      } catch (const std::exception& e) {
        throw ComputeError("central value failed at q=" + std::to_string(q) +
                           ", character index " + std::to_string(chi.index()) + ": " + e.what());
      }
      if (cache) cache->store(chi, L);
    }
    bool nonvanishing = std::abs(L) > tau_nv;
    if (chi.is_even()) {
      ++row.even_chars;
      if (nonvanishing) ++row.even_nv;
      if (spec) {
        cplx LM = L * mollifier_m(chi, *spec, *tab);
        s1.add(LM);
        s2.add(std::norm(LM));
      }
    } else {
      ++row.odd_chars;
      if (nonvanishing) ++row.odd_nv;
    }
  }
  row.s1_term = row.weight * s1.value();
  row.s2_term = row.weight * s2.value();
  return row;
}

}  // namespace

double ModulusSet::weight(i64 q) const {
  double t = static_cast<double>(q) / cfg.Q;
  return psi_bump(t) * h_tent(cfg.T(), t) * static_cast<double>(q) /
         static_cast<double>(euler_phi(q));
}

ModulusSet build_modulus_set(const WeightConfig& cfg) {
  if (!(cfg.Q >= 1.0)) throw std::invalid_argument("build_modulus_set: Q must be >= 1");
  if (cfg.D < 1) throw std::invalid_argument("build_modulus_set: D must be >= 1");
  double T = cfg.T();
  if (!(T >= 1.0)) throw std::invalid_argument("build_modulus_set: tent height Q^eta1 must be >= 1");

  ModulusSet ms{cfg, {}};
  i64 residue = ((cfg.a % cfg.D) + cfg.D) % cfg.D;
  i64 lo = std::max<i64>(1, static_cast<i64>(std::floor(cfg.Q / 2)));
  i64 hi = static_cast<i64>(std::ceil(1.5 * cfg.Q)) + 1;
  // membership |q/Q - 1| < min(1/2, 1/T) tested as |q - Q| * {2, T} < Q:
  // no early division, so the endpoint cases come out exact
  for (i64 q = lo; q <= hi; ++q) {
    if (q % cfg.D != residue) continue;
    double dq = std::abs(static_cast<double>(q) - cfg.Q);
    if (!(2.0 * dq < cfg.Q)) continue;
    if (!(dq * T < cfg.Q)) continue;
    ms.moduli.push_back(q);
  }
  return ms;
}

std::vector<ModulusRow> modulus_rows(const ModulusSet& ms, const MollifierSpec* spec,
                                     double tau_nv, int threads, LValueSource* cache) {
  if (threads < 1) throw std::invalid_argument("moments: thread count must be >= 1");
  ArithTable tab(spec ? std::max<i64>(
                            1, std::max(static_cast<i64>(std::floor(spec->y1())),
                                        static_cast<i64>(std::floor(spec->y2()))))
                      : 1);

  const size_t n = ms.moduli.size();
  std::vector<ModulusRow> rows(n);
  std::vector<std::exception_ptr> fail(n);
  auto fill = [&](size_t i) {
    try {
      rows[i] = per_modulus(ms.moduli[i], ms.cfg, spec, &tab, tau_nv, cache);
    } catch (...) {
      fail[i] = std::current_exception();
    }
  };

  size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), std::max<size_t>(n, 1));
  if (nthreads <= 1) {
    for (size_t i = 0; i < n; ++i) fill(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fill(i);
      }
    };
    std::vector<std::thread> pool;
    for (size_t k = 1; k < nthreads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < n; ++i)
    if (fail[i]) std::rethrow_exception(fail[i]);  // earliest q wins
  return rows;
}

MomentReport report_from_rows(const std::vector<ModulusRow>& rows, const MollifierSpec* spec,
                              double tau_nv) {
  MomentReport rep;
  rep.census.tau_nv = tau_nv;
  KahanCSum s1;
  KahanSum s2, even_nv, even_mass, odd_nv, odd_mass;
  for (const ModulusRow& r : rows) {
    s1.add(r.s1_term);
    s2.add(r.s2_term);
    even_mass.add(r.weight * static_cast<double>(r.even_chars));
    even_nv.add(r.weight * static_cast<double>(r.even_nv));
    odd_mass.add(r.weight * static_cast<double>(r.odd_chars));
    odd_nv.add(r.weight * static_cast<double>(r.odd_nv));
    rep.census.even_chars += r.even_chars;
    rep.census.odd_chars += r.odd_chars;
  }
  rep.s1 = s1.value();
  rep.s2 = s2.value();
  rep.census.even_nonvanishing = even_nv.value();
  rep.census.even_mass = even_mass.value();
  rep.census.odd_nonvanishing = odd_nv.value();
  rep.census.odd_mass = odd_mass.value();
  rep.mass = rep.census.even_mass;
  if (spec) {
    double p1_end = to_double(spec->p1.at(1));
    double p2_end = to_double(spec->p2.at(1));
    rep.s1_predicted = (p1_end + p2_end) * rep.mass;
    rep.s2_predicted = (lambda_coeff(spec->p1, spec->theta1) +
                        lambda_coeff(spec->p2, spec->theta2) + 2.0 * p1_end * p2_end) *
                       rep.mass;
  }
  rep.cs_bound = cs_lower_bound(rep.s1, rep.s2, &rep.cs_degenerate);
  rep.note =
      "s2 prediction coefficient = lambda(P1,theta1) + lambda(P2,theta2) + 2 P1(1) P2(1); "
      "predictions are diagnostics at this scale, the Cauchy-Schwarz check is exact";
  return rep;
}

cplx s1_moment(const ModulusSet& ms, const MollifierSpec& spec, int threads,
               LValueSource* cache) {
  return report_from_rows(modulus_rows(ms, &spec, 1e-8, threads, cache), &spec, 1e-8).s1;
}

double s2_moment(const ModulusSet& ms, const MollifierSpec& spec, int threads,
                 LValueSource* cache) {
  return report_from_rows(modulus_rows(ms, &spec, 1e-8, threads, cache), &spec, 1e-8).s2;
}

double weighted_mass(const ModulusSet& ms) {
  KahanSum acc;
  for (i64 q : ms.moduli) {
    CharacterSet set = enumerate_characters(q);
    i64 count = 0;
    for (const Character& chi : set.chars)
      if (!chi.is_principal() && chi.is_primitive() && chi.is_even()) ++count;
    acc.add(ms.weight(q) * static_cast<double>(count));
  }
  return acc.value();
}

double predict_s1(const ModulusSet& ms, const MollifierSpec& spec) {
  double p_ends = to_double(spec.p1.at(1) + spec.p2.at(1));
  return p_ends * weighted_mass(ms);
}

double predict_s2(const ModulusSet& ms, const MollifierSpec& spec) {
  double p1_end = to_double(spec.p1.at(1));
  double p2_end = to_double(spec.p2.at(1));
  double coeff = lambda_coeff(spec.p1, spec.theta1) + lambda_coeff(spec.p2, spec.theta2) +
                 2.0 * p1_end * p2_end;
  return coeff * weighted_mass(ms);
}

double cs_lower_bound(cplx s1, double s2, bool* degenerate) {
  if (s2 < 0.0) throw std::invalid_argument("cs_lower_bound: s2 must be >= 0");
  if (degenerate) *degenerate = (s2 == 0.0);
  if (s2 == 0.0) return 0.0;
  return std::norm(s1) / s2;
}

CensusReport census(const ModulusSet& ms, double tau_nv, int threads, LValueSource* cache) {
  if (!(tau_nv > 0.0)) throw std::invalid_argument("census: tau_nv must be > 0");
  return report_from_rows(modulus_rows(ms, nullptr, tau_nv, threads, cache), nullptr, tau_nv)
      .census;
}

MomentReport compute_moments(const ModulusSet& ms, const MollifierSpec& spec, double tau_nv,
                             int threads, LValueSource* cache) {
  if (!(tau_nv > 0.0)) throw std::invalid_argument("compute_moments: tau_nv must be > 0");
  return report_from_rows(modulus_rows(ms, &spec, tau_nv, threads, cache), &spec, tau_nv);
}

}  // namespace mollab
