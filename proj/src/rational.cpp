#include "pbs/rational.hpp"

#include <charconv>
#include <limits>

namespace pbs {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const auto g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw std::overflow_error("denominator lcm overflows 64 bits");
  }
  return out;
}

std::int64_t to_ticks(const Rational& value, std::int64_t scale) {
  if (scale % value.denominator() != 0) {
    throw std::overflow_error("tick scale is not a multiple of the denominator");
  }
  std::int64_t out = 0;
  if (__builtin_mul_overflow(value.numerator(), scale / value.denominator(), &out)) {
    throw std::overflow_error("tick value overflows 64 bits");
  }
  return out;
}

}  // namespace pbs
