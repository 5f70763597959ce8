#ifndef MEANINEQ_RATIONAL_HPP
#define MEANINEQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace meanineq::algebra {

// Arbitrary-precision integers and reduced rationals. cpp_rational keeps the
// canonical form this library relies on: gcd(|num|, den) == 1, den > 0.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double rat_to_double(const Rat& r);

// Serializes as "p" or "p/q" with q > 0.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rat rat_from_string(const std::string& text);

// gcd of two nonnegative rationals, gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); the
// positive generator of the Z-module a*Z + c*Z intersected with Q.
Rat rat_gcd(const Rat& a, const Rat& b);

} // namespace meanineq::algebra

#endif
