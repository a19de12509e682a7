#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclic {

using Bigint = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Bigint& b) { return b.convert_to<double>(); }

} // namespace cyclic
