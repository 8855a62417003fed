#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace hodgering {

// Exact arbitrary-precision rational scalar. All linear algebra in this
// library runs over this type; there is no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace hodgering
