#ifndef ABJAD_CHRONOLOGY_HPP_
#define ABJAD_CHRONOLOGY_HPP_

#include <compare>
#include <cstdint>

namespace abjad {

struct YearAH {
  std::int64_t year = 1;
  friend auto operator<=>(const YearAH&, const YearAH&) = default;
};

struct YearCE {
  std::int64_t year = 622;
  friend auto operator<=>(const YearCE&, const YearCE&) = default;
};

// Year-level approximation from the mean lunar/solar year ratio. Expect
// +-1 year against a tabular calendar.
inline constexpr double kLunarToSolarRatio = 0.970224;
inline constexpr double kHijriEpochOffset = 621.5774;

// Throws kOutOfRange for years below 1.
YearCE hijri_to_gregorian_year(YearAH h);

// Throws kPreEpoch for years before 622. The result is never below 1.
YearAH gregorian_to_hijri_year(YearCE g);

}  // namespace abjad

#endif  // ABJAD_CHRONOLOGY_HPP_
