#pragma once
// Mollified moments over a window of moduli.
//
// The modulus set is { q = a (mod D) : Phi(q/Q) > 0 } with Phi = Psi * H_T,
// i.e. q/Q inside the bump support (1/2, 3/2) and within 1/T of a tent peak.
// Each q carries the weight w(q) = Phi(q/Q) * q/phi(q), and the sums run over
// the non-principal primitive characters mod q, split by parity:
//
//   S1 = sum_q w(q) sum_{chi even} L(1/2, chi) M(chi)      (complex)
//   S2 = sum_q w(q) sum_{chi even} |L(1/2, chi) M(chi)|^2  (>= 0)
//
// with L from the direct oracle (the smoothed-square route is cross-check
// material, and it only covers |L|^2 for even chi).  Alongside the moments:
// the predicted main terms
//
//   S1 ~ (P1(1) + P2(1)) * mass,
//   S2 ~ (lambda(P1, theta1) + lambda(P2, theta2) + 2 P1(1) P2(1)) * mass,
//   mass = sum_q w(q) * #{chi mod q even primitive},
//
// the Cauchy-Schwarz lower bound |S1|^2 / S2 for the weighted count of even
// primitive chi with L(1/2, chi) != 0, and the direct census of that count at
// threshold tau_nv (both parities, so the even/odd split stays visible).  At
// this scale the predictions are diagnostics -- their error terms are not
// small -- but Cauchy-Schwarz against the census is exact and is checked on
// every run.
//
// Determinism contract: moduli ascending, characters in index order, every
// accumulation compensated; the parallel fill writes into per-q slots that
// are reduced sequentially afterwards, so S1 and S2 come out bit-identical
// for every thread count.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mollab/kahan.hpp"
#include "mollab/mollifier.hpp"
#include "mollab/weights.hpp"

namespace mollab {

// Moduli q = a (mod D) with Phi(q/Q) > 0, ascending, with the window that
// produced them.  May be empty (downstream sums are then zero).
struct ModulusSet {
  WeightConfig cfg;
  std::vector<i64> moduli;
  double weight(i64 q) const;  // Phi(q/Q) * q/phi(q)
};

ModulusSet build_modulus_set(const WeightConfig& cfg);

// Optional store for central values, keyed by (q, character index).
// Implementations must tolerate concurrent calls; a lookup hit must return
// the exact double pair that was stored, or determinism is lost.  store
// receives the full character so a persistent backend can record parity and
// conductor alongside the value.
class LValueSource {
 public:
  virtual ~LValueSource() = default;
  virtual std::optional<cplx> lookup(i64 q, i64 index) = 0;
  virtual void store(const Character& chi, cplx value) = 0;
};

// Per-modulus detail behind the aggregates, ascending q: raw character
// counts by parity and the weighted partial sums.  The census and moments
// tables are these rows verbatim; reducing them (in order, compensated)
// reproduces the aggregate report bit for bit.
struct ModulusRow {
  i64 q = 0;
  double weight = 0.0;                // Phi(q/Q) * q/phi(q)
  i64 even_chars = 0, odd_chars = 0;  // primitive non-principal, by parity
  i64 even_nv = 0, odd_nv = 0;        // of those, |L| > tau_nv
  cplx s1_term{0.0, 0.0};             // weight * sum_even L*M; 0 without a mollifier
  double s2_term = 0.0;
};

// spec == nullptr skips the mollified sums (census-only pass).
std::vector<ModulusRow> modulus_rows(const ModulusSet& ms, const MollifierSpec* spec,
                                     double tau_nv, int threads = 1,
                                     LValueSource* cache = nullptr);

struct CensusReport {
  double tau_nv = 0.0;
  double even_nonvanishing = 0.0;  // weighted count, |L| > tau_nv
  double even_mass = 0.0;          // weighted count of all even primitive chi
  double odd_nonvanishing = 0.0;
  double odd_mass = 0.0;
  i64 even_chars = 0;  // raw (unweighted) character counts behind the above
  i64 odd_chars = 0;
  double even_proportion() const { return even_mass > 0 ? even_nonvanishing / even_mass : 0.0; }
  double odd_proportion() const { return odd_mass > 0 ? odd_nonvanishing / odd_mass : 0.0; }
};

struct MomentReport {
  cplx s1{0.0, 0.0};
  double s2 = 0.0;
  double mass = 0.0;  // sum_q w(q) * #{even primitive chi mod q}
  double s1_predicted = 0.0;
  double s2_predicted = 0.0;
  double cs_bound = 0.0;       // |S1|^2 / S2, or 0 when degenerate
  bool cs_degenerate = false;  // S2 = 0: the bound is pinned to zero
  CensusReport census;
  std::string note;  // reading choices a consumer of the numbers should see
};

cplx s1_moment(const ModulusSet& ms, const MollifierSpec& spec, int threads = 1,
               LValueSource* cache = nullptr);
double s2_moment(const ModulusSet& ms, const MollifierSpec& spec, int threads = 1,
                 LValueSource* cache = nullptr);

// sum_q w(q) * #{even primitive non-principal chi mod q}; no L-values needed.
double weighted_mass(const ModulusSet& ms);

double predict_s1(const ModulusSet& ms, const MollifierSpec& spec);
double predict_s2(const ModulusSet& ms, const MollifierSpec& spec);

// |s1|^2 / s2.  s2 = 0 gives 0 and sets *degenerate; s2 < 0 throws.
double cs_lower_bound(cplx s1, double s2, bool* degenerate = nullptr);

CensusReport census(const ModulusSet& ms, double tau_nv, int threads = 1,
                    LValueSource* cache = nullptr);

// Ordered compensated reduction of rows into the aggregate report; spec adds
// the predictions (pass the same spec the rows were built with, or nullptr
// for a census-only reduction with zero moments).
MomentReport report_from_rows(const std::vector<ModulusRow>& rows, const MollifierSpec* spec,
                              double tau_nv);

// One pass producing everything above.
MomentReport compute_moments(const ModulusSet& ms, const MollifierSpec& spec,
                             double tau_nv = 1e-8, int threads = 1,
                             LValueSource* cache = nullptr);

}  // namespace mollab
