#ifndef ABJAD_READING_HPP_
#define ABJAD_READING_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace abjad {

enum class Rank { kUnits, kTens, kHundreds };

struct RankComponent {
  Rank rank = Rank::kUnits;
  int value = 0;  // 1..9, 10..90 or 100..900

  friend bool operator==(const RankComponent&, const RankComponent&) = default;
};

struct DigitGroup {
  int index = 0;        // power of 1000
  int value = 0;        // 0..999
  std::vector<RankComponent> components;  // nonzero only, units first
};

struct NumberReading {
  std::uint64_t value = 0;
  std::vector<DigitGroup> groups;  // least significant first
};

enum class ReadingDirection { kRightToLeft, kLeftToRight };

struct ReadingStyle {
  // Right-to-left only: join everything, groups included, with " et ".
  bool figure_exact = false;
  std::string component_joiner = " et ";
  std::string group_separator = " ; ";
};

// Label i names group i; entry 0 is normally empty.
std::vector<std::string> DefaultScaleLabels();

NumberReading decompose(std::uint64_t n);

// Throws kInsufficientLabels when the reading has more groups than labels.
std::string format_reading(const NumberReading& reading,
                           ReadingDirection direction,
                           const std::vector<std::string>& scale_labels,
                           const ReadingStyle& style = {});

// Components in the order a reading in `direction` emits them.
std::vector<RankComponent> EmittedComponents(const NumberReading& reading,
                                             ReadingDirection direction);
// Group indices in emission order; zero groups are skipped unless the
// whole number is zero.
std::vector<int> EmittedGroupIndices(const NumberReading& reading,
                                     ReadingDirection direction);

}  // namespace abjad

#endif  // ABJAD_READING_HPP_
