#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// boost 1.74 declares rational==integer only as templates, and under C++20
// the rewritten reversed candidate makes that overload call itself. Exact
// non-template overloads win overload resolution and stop the recursion.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace levibranch {

using Rational = boost::rational<std::int64_t>;
// Unbounded rationals, for evaluating polynomials at numeric points.
using BigRational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0 (integers are written "p/1").
std::string to_string(const Rational& r);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace levibranch
