#include "vafilt/core/mode_index.hpp"

#include "vafilt/core/errors.hpp"

namespace vafilt {

ModeIndex::ModeIndex(long base, int sector, int period) : ticks_(0), period_(period) {
  if (period < 1) throw UnsupportedPeriod("period must be positive");
  if (sector < 0 || sector >= period)
    throw SectorMismatch("sector " + std::to_string(sector) + " outside 0.." +
                         std::to_string(period - 1));
  ticks_ = base * period + sector;
}

ModeIndex ModeIndex::from_ticks(long ticks, int period) {
  if (period < 1) throw UnsupportedPeriod("period must be positive");
  return ModeIndex(ticks, period, true);
}

HalfWeight::HalfWeight(long ticks, int period) : ticks_(ticks), period_(period) {
  if (period < 1) throw UnsupportedPeriod("period must be positive");
  if (ticks < 0) throw Error("weights are nonnegative");
}

HalfWeight HalfWeight::from_rational(const Rational& value, int period) {
  Rational scaled = value * Rational(period);
  if (!scaled.is_integer())
    throw ConfigError("weight " + value.str() + " is not a multiple of 1/" + std::to_string(period));
  if (scaled.sign() < 0) throw ConfigError("weight " + value.str() + " is negative");
  return HalfWeight(scaled.floor(), period);
}

}  // namespace vafilt
