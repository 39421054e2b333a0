#pragma once
// Exact rational arithmetic.  The polynomial constraints, the lambda
// functional, and the small Gram solves all live over Q, so they are done
// exactly and converted to double only at the boundary.

#include <boost/multiprecision/cpp_int.hpp>

namespace mollab {

using rational = boost::multiprecision::cpp_rational;

inline double to_double(const rational& r) { return r.convert_to<double>(); }

}  // namespace mollab
