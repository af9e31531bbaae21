#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pbs {

/// Exact time quantity. Weights, durations, setup costs and schedule costs
/// are all carried as reduced fractions of 64-bit integers.
using Rational = boost::rational<std::int64_t>;

/// Parses "17", "-3" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// -1, 0 or 1. Use this rather than comparing against an int literal:
/// boost::rational<int64_t> vs int comparisons recurse without end.
inline int sign(const Rational& value) {
  return (value.numerator() > 0) - (value.numerator() < 0);
}

inline double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

/// Least common multiple of two positive denominators, with overflow check.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

/// value * scale as an integer; throws std::overflow_error if the product is
/// not integral or does not fit.
std::int64_t to_ticks(const Rational& value, std::int64_t scale);

}  // namespace pbs
