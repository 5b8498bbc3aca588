#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten-candidate rules. These exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<long>& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<long>& a, int b) { return a == static_cast<long>(b); }
inline bool operator==(const rational<long>& a, long long b) { return a == static_cast<long>(b); }
}  // namespace boost

namespace degenlab {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// "7/2", or "4" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace degenlab
