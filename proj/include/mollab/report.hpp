#pragma once
// Plot-ready emission.  CSV uses RFC-4180 quoting, '.' as the decimal
// separator, and 17 significant digits for doubles so every value parses
// back to the same bits; JSON goes through nlohmann's shortest round-trip
// serialization, which has the same property.  Files are written whole to
// <path>.tmp and renamed into place, so readers never see a partial table.

#include <string>
#include <vector>

#include "json.hpp"

#include "mollab/moments.hpp"
#include "mollab/optimizer.hpp"

namespace mollab {

std::string fmt17(double x);
std::string csv_escape(const std::string& field);

void write_text_atomic(const std::string& path, const std::string& content);

// census table: one row per (q, parity)
//   q,parity,primitive_count,nonvanishing_count,weight
std::string census_csv(const std::vector<ModulusRow>& rows);

// moments table: one row per q with the weighted partial sums
//   q,weight,s1_re,s1_im,s2
std::string moments_csv(const std::vector<ModulusRow>& rows);

// the same tables as JSON arrays, for --format json
nlohmann::json census_rows_json(const std::vector<ModulusRow>& rows);
nlohmann::json moments_rows_json(const std::vector<ModulusRow>& rows);

// census summary: proportions, moments, the Cauchy-Schwarz bound, and the
// reference value (1/2 - c(eta1,eta2) - eps) * mass when the etas admit it
// (null otherwise).  empty = no moduli in the window.
nlohmann::json summary_json(const MomentReport& rep, const WeightConfig& cfg,
                            const MollifierSpec& spec, double eps_reference);

// moments summary: S1, S2, predictions, and the ratios moment/prediction
// (null where a prediction is zero)
nlohmann::json moments_json(const MomentReport& rep, const WeightConfig& cfg,
                            const MollifierSpec& spec);

// optimizer result: exact coefficients as "p/q" strings next to their double
// values, the achieved ratio, and the eta-side quantities; theta at or above
// theta_max(eta1, eta2) only warns, it does not refuse
nlohmann::json optimize_json(const OptimizeResult& res, int degree, double theta1, double theta2,
                             double eta1, double eta2);

}  // namespace mollab
