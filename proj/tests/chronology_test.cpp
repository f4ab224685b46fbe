#include <doctest.h>

#include <cstdlib>

#include "abjad/chronology.hpp"
#include "test_util.hpp"

namespace abjad {
namespace {

using testing::ErrorCodeOf;

TEST_CASE("hijri to gregorian") {
  CHECK(hijri_to_gregorian_year({1225}).year == 1810);
  // 0.970224 + 621.5774 = 622.5476
  CHECK(std::llabs(hijri_to_gregorian_year({1}).year - 622) <= 1);
  // 0.970224 * 1311 + 621.5774 = 1893.5411
  CHECK(hijri_to_gregorian_year({1311}).year == 1894);
  CHECK(ErrorCodeOf([] { hijri_to_gregorian_year({0}); }) ==
        ErrorCode::kOutOfRange);
}

TEST_CASE("gregorian to hijri") {
  CHECK(gregorian_to_hijri_year({1810}).year == 1225);
  CHECK(gregorian_to_hijri_year({622}).year == 1);
  CHECK(gregorian_to_hijri_year({1894}).year == 1311);
  CHECK(ErrorCodeOf([] { gregorian_to_hijri_year({621}); }) ==
        ErrorCode::kPreEpoch);
}

TEST_CASE("property: round-trip drift and monotonicity") {
  YearCE previous_ce{0};
  for (std::int64_t h = 1; h <= 2000; ++h) {
    const YearCE ce = hijri_to_gregorian_year({h});
    REQUIRE(std::llabs(gregorian_to_hijri_year(ce).year - h) <= 1);
    REQUIRE(ce >= previous_ce);
    previous_ce = ce;
  }
  YearAH previous_ah{0};
  for (std::int64_t g = 622; g <= 2700; ++g) {
    const YearAH ah = gregorian_to_hijri_year({g});
    REQUIRE(ah >= previous_ah);
    REQUIRE(ah.year >= 1);
    previous_ah = ah;
  }
}

}  // namespace
}  // namespace abjad
