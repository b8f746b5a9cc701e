#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace liegauge {

// Exact rational constants. cpp_rational keeps gcd(num, den) = 1 and den > 0
// automatically, which is exactly the Scalar invariant we need.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline bool is_integer(const Scalar& s) { return denominator(s) == 1; }

inline std::string scalar_str(const Scalar& s) { return s.str(); }

// s^k for possibly negative k.
Scalar scalar_pow(const Scalar& s, long k);

} // namespace liegauge
