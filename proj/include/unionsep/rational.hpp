#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace unionsep {

/// Exact rational used by every verdict path. Always normalized (gcd 1,
/// positive denominator).
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Smallest integer >= r.
inline std::int64_t ceil(const Rational &r) {
  const auto q = r.numerator() / r.denominator();
  const auto rem = r.numerator() % r.denominator();
  return rem > 0 ? q + 1 : q;
}

/// Largest integer <= r.
inline std::int64_t floor(const Rational &r) {
  const auto q = r.numerator() / r.denominator();
  const auto rem = r.numerator() % r.denominator();
  return rem < 0 ? q - 1 : q;
}

} // namespace unionsep
