#include "mollab/runconfig.hpp"

#include <stdexcept>
#include <thread>

namespace mollab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

rational parse_coeff(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("polynomial: empty coefficient");
  size_t slash = tok.find('/');
  try {
    if (slash != std::string::npos) {
      using boost::multiprecision::cpp_int;
      cpp_int num(trim(tok.substr(0, slash)));
      cpp_int den(trim(tok.substr(slash + 1)));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return rational(num, den);
    }
    if (tok.find_first_of(".eE") == std::string::npos) {
      return rational(boost::multiprecision::cpp_int(tok));
    }
    size_t used = 0;
    double d = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return rational(d);  // exact binary value of the double
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("polynomial: cannot parse coefficient '" + tok + "'");
  } catch (const std::runtime_error&) {  // cpp_int rejects garbage this way
    throw std::invalid_argument("polynomial: cannot parse coefficient '" + tok + "'");
  }
}

}  // namespace

std::vector<rational> parse_poly(const std::string& s) {
  std::vector<rational> coeffs;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    coeffs.push_back(parse_coeff(trim(s.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return coeffs;
}

MollifierSpec make_spec(const RunConfig& rc) {
  return MollifierSpec(rc.theta1, rc.theta2, PolySpec(parse_poly(rc.poly1)),
                       PolySpec(parse_poly(rc.poly2)), rc.weight.Q);
}

int resolve_threads(int threads) {
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::string> config_violations(const RunConfig& rc) {
  return validate_config(rc.weight, make_spec(rc));
}

}  // namespace mollab
