#pragma once

// Exact arithmetic types used across the library. All computations are over
// arbitrary-precision integers / rationals; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace okls {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string to_string(const Int& a) { return a.str(); }
inline std::string to_string(const Rat& a)
{
    if (rat_den(a) == 1) return rat_num(a).str();
    return rat_num(a).str() + "/" + rat_den(a).str();
}

} // namespace okls
