#include "mollab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mollab/cache.hpp"
#include "mollab/errors.hpp"

namespace mollab {

namespace {

using nlohmann::json;

std::string rational_str(const rational& r) { return r.str(); }

json poly_json(const PolySpec& p) {
  json exact = json::array();
  json approx = json::array();
  for (const rational& c : p.coeffs()) {
    exact.push_back(rational_str(c));
    approx.push_back(to_double(c));
  }
  return json{{"coefficients_exact", exact}, {"coefficients", approx}};
}

json config_json(const WeightConfig& cfg) {
  return json{{"Q", cfg.Q},   {"eta1", cfg.eta1},           {"eta2", cfg.eta2},
              {"a", cfg.a},   {"D", cfg.D},                 {"eps_split", cfg.eps_split},
              {"T", cfg.T()}, {"K", cfg.K()}};
}

json spec_json(const MollifierSpec& spec) {
  return json{{"theta1", spec.theta1}, {"theta2", spec.theta2},
              {"y1", spec.y1()},       {"y2", spec.y2()},
              {"poly1", poly_json(spec.p1)}, {"poly2", poly_json(spec.p2)}};
}

json census_block(const CensusReport& c) {
  return json{{"tau_nv", c.tau_nv},
              {"even", json{{"nonvanishing", c.even_nonvanishing},
                            {"mass", c.even_mass},
                            {"proportion", c.even_proportion()},
                            {"characters", c.even_chars}}},
              {"odd", json{{"nonvanishing", c.odd_nonvanishing},
                           {"mass", c.odd_mass},
                           {"proportion", c.odd_proportion()},
                           {"characters", c.odd_chars}}}};
}

}  // namespace

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw ComputeError("cannot write " + tmp);
    out << content;
    if (!out) throw ComputeError("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string census_csv(const std::vector<ModulusRow>& rows) {
  std::string out = "q,parity,primitive_count,nonvanishing_count,weight\n";
  for (const ModulusRow& r : rows) {
    std::string w = fmt17(r.weight);
    out += std::to_string(r.q) + ",even," + std::to_string(r.even_chars) + "," +
           std::to_string(r.even_nv) + "," + w + "\n";
    out += std::to_string(r.q) + ",odd," + std::to_string(r.odd_chars) + "," +
           std::to_string(r.odd_nv) + "," + w + "\n";
  }
  return out;
}

std::string moments_csv(const std::vector<ModulusRow>& rows) {
  std::string out = "q,weight,s1_re,s1_im,s2\n";
  for (const ModulusRow& r : rows) {
    out += std::to_string(r.q) + "," + fmt17(r.weight) + "," + fmt17(r.s1_term.real()) + "," +
           fmt17(r.s1_term.imag()) + "," + fmt17(r.s2_term) + "\n";
  }
  return out;
}

json census_rows_json(const std::vector<ModulusRow>& rows) {
  json arr = json::array();
  for (const ModulusRow& r : rows) {
    arr.push_back(json{{"q", r.q},
                       {"parity", "even"},
                       {"primitive_count", r.even_chars},
                       {"nonvanishing_count", r.even_nv},
                       {"weight", r.weight}});
    arr.push_back(json{{"q", r.q},
                       {"parity", "odd"},
                       {"primitive_count", r.odd_chars},
                       {"nonvanishing_count", r.odd_nv},
                       {"weight", r.weight}});
  }
  return arr;
}

json moments_rows_json(const std::vector<ModulusRow>& rows) {
  json arr = json::array();
  for (const ModulusRow& r : rows) {
    arr.push_back(json{{"q", r.q},
                       {"weight", r.weight},
                       {"s1_re", r.s1_term.real()},
                       {"s1_im", r.s1_term.imag()},
                       {"s2", r.s2_term}});
  }
  return arr;
}

json summary_json(const MomentReport& rep, const WeightConfig& cfg, const MollifierSpec& spec,
                  double eps_reference) {
  json j;
  j["config"] = config_json(cfg);
  j["mollifier"] = spec_json(spec);
  j["census"] = census_block(rep.census);
  j["mass"] = rep.mass;
  j["s1"] = json{{"re", rep.s1.real()}, {"im", rep.s1.imag()}};
  j["s2"] = rep.s2;
  j["cs_bound"] = rep.cs_bound;
  j["cs_degenerate"] = rep.cs_degenerate;
  j["empty"] = rep.census.even_chars == 0 && rep.census.odd_chars == 0;
  j["note"] = rep.note;
  j["tool_version"] = kToolVersion;

  // reference line (1/2 - c(eta1, eta2) - eps) * mass, defined only while
  // 41 eta1 + 5 eta2 < 1/2
  j["reference_formula"] = "(1/2 - c(eta1,eta2) - eps) * mass";
  j["reference_eps"] = eps_reference;
  if (41.0 * cfg.eta1 + 5.0 * cfg.eta2 < 0.5) {
    j["reference_value"] = (0.5 - c_eta(cfg.eta1, cfg.eta2) - eps_reference) * rep.mass;
  } else {
    j["reference_value"] = nullptr;
  }
  return j;
}

json moments_json(const MomentReport& rep, const WeightConfig& cfg, const MollifierSpec& spec) {
  json j;
  j["config"] = config_json(cfg);
  j["mollifier"] = spec_json(spec);
  j["mass"] = rep.mass;
  j["s1"] = json{{"re", rep.s1.real()}, {"im", rep.s1.imag()}};
  j["s2"] = rep.s2;
  j["s1_predicted"] = rep.s1_predicted;
  j["s2_predicted"] = rep.s2_predicted;
  j["s1_ratio"] = rep.s1_predicted != 0.0 ? json(rep.s1.real() / rep.s1_predicted) : json(nullptr);
  j["s2_ratio"] = rep.s2_predicted != 0.0 ? json(rep.s2 / rep.s2_predicted) : json(nullptr);
  j["census"] = census_block(rep.census);
  j["cs_bound"] = rep.cs_bound;
  j["cs_degenerate"] = rep.cs_degenerate;
  j["empty"] = rep.census.even_chars == 0 && rep.census.odd_chars == 0;
  j["note"] = rep.note;
  j["tool_version"] = kToolVersion;
  return j;
}

json optimize_json(const OptimizeResult& res, int degree, double theta1, double theta2,
                   double eta1, double eta2) {
  json j;
  j["degree"] = degree;
  j["theta1"] = theta1;
  j["theta2"] = theta2;
  j["poly1"] = poly_json(res.p1);
  j["poly2"] = poly_json(res.p2);
  j["ratio"] = to_double(res.ratio);
  j["ratio_exact"] = rational_str(res.ratio);
  j["closed_form"] = res.closed_form;
  j["sandwich"] = sandwich_value(theta1, theta2);
  j["descent_gap"] = res.descent_gap;
  json slack = json::object();
  for (const auto& [name, value] : res.slack) slack[name] = value;
  j["slack"] = slack;
  j["eta1"] = eta1;
  j["eta2"] = eta2;
  double cap = theta_max(eta1, eta2);
  j["theta_max"] = cap;
  if (41.0 * eta1 + 5.0 * eta2 < 0.5) {
    j["c_eta"] = c_eta(eta1, eta2);
  } else {
    j["c_eta"] = nullptr;
  }
  json warnings = json::array();
  if (theta1 >= cap || theta2 >= cap)
    warnings.push_back("theta reaches theta_max(eta1, eta2) = " + fmt17(cap) +
                       ": the mollifier is longer than the admissible range");
  if (theta1 != theta2)
    warnings.push_back(
        "theta1 != theta2: the achieved maximum is strictly below the sandwich value "
        "(theta1+theta2)/(1+theta1+theta2); both are reported");
  j["warnings"] = warnings;
  j["tool_version"] = kToolVersion;
  return j;
}

}  // namespace mollab
