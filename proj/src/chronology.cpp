#include "abjad/chronology.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abjad/error.hpp"

namespace abjad {

YearCE hijri_to_gregorian_year(YearAH h) {
  if (h.year < 1) {
    throw Error(ErrorCode::kOutOfRange,
                "Hijri year " + std::to_string(h.year) + " is before 1 AH");
  }
  const double ce =
      kLunarToSolarRatio * static_cast<double>(h.year) + kHijriEpochOffset;
  return {static_cast<std::int64_t>(std::llround(ce))};
}

YearAH gregorian_to_hijri_year(YearCE g) {
  if (g.year < 622) {
    throw Error(ErrorCode::kPreEpoch,
                std::to_string(g.year) + " CE precedes the Hijri epoch (622)");
  }
  const double ah =
      (static_cast<double>(g.year) - kHijriEpochOffset) / kLunarToSolarRatio;
  // 622 itself rounds to 0; clamp onto the first Hijri year.
  return {std::max<std::int64_t>(1, std::llround(ah))};
}

}  // namespace abjad
