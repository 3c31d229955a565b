#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace gseq {

// Exact rational scalar. cpp_rational keeps lowest terms with a positive
// denominator, which is exactly the canonical form every module relies on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// (-1)^e
inline int pow_sign(long long e) { return (e % 2 != 0) ? -1 : 1; }

}  // namespace gseq
