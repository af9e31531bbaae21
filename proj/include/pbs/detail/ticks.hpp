#pragma once

#include <cstdint>

#include "pbs/rational.hpp"

namespace pbs::detail {

/// Common denominator for a set of rationals, so integer kernels can work on
/// exact "ticks" (value × scale) and convert back without loss.
class TickScale {
 public:
  void include(const Rational& value) { scale_ = checked_lcm(scale_, value.denominator()); }

  std::int64_t ticks(const Rational& value) const { return to_ticks(value, scale_); }
  Rational value(std::int64_t ticks) const { return Rational(ticks, scale_); }
  std::int64_t scale() const { return scale_; }

 private:
  std::int64_t scale_ = 1;
};

}  // namespace pbs::detail
