#pragma once

#include <string>

#include "vafilt/core/rational.hpp"

namespace vafilt {

/// Floor division and nonnegative remainder for possibly negative numerators.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

/// A mode m + s/T, stored as the integer count of 1/T steps.
class ModeIndex {
 public:
  ModeIndex(long base, int sector, int period);
  static ModeIndex from_ticks(long ticks, int period);

  long base() const { return floor_div(ticks_, period_); }
  int sector() const { return static_cast<int>(floor_mod(ticks_, period_)); }
  int period() const { return period_; }
  long ticks() const { return ticks_; }
  Rational value() const { return Rational(ticks_, period_); }
  ModeIndex shifted(long integer_shift) const {
    return from_ticks(ticks_ + integer_shift * period_, period_);
  }
  std::string str() const { return value().str(); }

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;

 private:
  ModeIndex(long ticks, int period, bool) : ticks_(ticks), period_(period) {}
  long ticks_;
  int period_;
};

/// Nonnegative weight in (1/T)Z, stored in 1/T steps.
class HalfWeight {
 public:
  HalfWeight(long ticks, int period);
  /// Exact conversion; throws if the value is negative or not a multiple of 1/T.
  static HalfWeight from_rational(const Rational& value, int period);
  static HalfWeight parse(const std::string& text, int period) {
    return from_rational(Rational::parse(text), period);
  }

  long ticks() const { return ticks_; }
  int period() const { return period_; }
  Rational value() const { return Rational(ticks_, period_); }
  std::string str() const { return value().str(); }

  friend bool operator==(const HalfWeight&, const HalfWeight&) = default;
  friend auto operator<=>(const HalfWeight& a, const HalfWeight& b) { return a.ticks_ <=> b.ticks_; }

 private:
  long ticks_;
  int period_;
};

/// "p/q" rendering of ticks/T in lowest terms.
inline std::string ticks_str(long ticks, int period) { return Rational(ticks, period).str(); }

}  // namespace vafilt
