#include "abjad/reading.hpp"

#include <algorithm>

#include "abjad/error.hpp"

namespace abjad {
namespace {

std::string GroupLabel(const std::vector<std::string>& labels, int index) {
  const std::string& label = labels[static_cast<std::size_t>(index)];
  return label.empty() ? std::string() : " " + label;
}

std::string JoinComponents(const DigitGroup& group, const std::string& joiner) {
  std::string out;
  for (const RankComponent& c : group.components) {
    if (!out.empty()) out += joiner;
    out += std::to_string(c.value);
  }
  return out;
}

}  // namespace

std::vector<std::string> DefaultScaleLabels() {
  return {"", "mille", "millions", "milliards"};
}

NumberReading decompose(std::uint64_t n) {
  NumberReading reading;
  reading.value = n;
  int index = 0;
  do {
    DigitGroup group;
    group.index = index++;
    group.value = static_cast<int>(n % 1000);
    n /= 1000;
    const int digits[3] = {group.value % 10, group.value / 10 % 10,
                           group.value / 100};
    const Rank ranks[3] = {Rank::kUnits, Rank::kTens, Rank::kHundreds};
    for (int r = 0, scale = 1; r < 3; ++r, scale *= 10) {
      if (digits[r] != 0) group.components.push_back({ranks[r], digits[r] * scale});
    }
    reading.groups.push_back(std::move(group));
  } while (n != 0);
  return reading;
}

std::vector<int> EmittedGroupIndices(const NumberReading& reading,
                                     ReadingDirection direction) {
  std::vector<int> indices;
  for (const DigitGroup& g : reading.groups) {
    if (g.value != 0) indices.push_back(g.index);
  }
  if (indices.empty()) indices.push_back(0);
  if (direction == ReadingDirection::kLeftToRight) {
    std::reverse(indices.begin(), indices.end());
  }
  return indices;
}

std::vector<RankComponent> EmittedComponents(const NumberReading& reading,
                                             ReadingDirection direction) {
  std::vector<RankComponent> out;
  for (int index : EmittedGroupIndices(reading, direction)) {
    const auto& components =
        reading.groups[static_cast<std::size_t>(index)].components;
    if (direction == ReadingDirection::kRightToLeft) {
      out.insert(out.end(), components.begin(), components.end());
    } else {
      out.insert(out.end(), components.rbegin(), components.rend());
    }
  }
  return out;
}

std::string format_reading(const NumberReading& reading,
                           ReadingDirection direction,
                           const std::vector<std::string>& scale_labels,
                           const ReadingStyle& style) {
  if (reading.groups.size() > scale_labels.size()) {
    throw Error(ErrorCode::kInsufficientLabels,
                std::to_string(reading.groups.size()) + " groups but only " +
                    std::to_string(scale_labels.size()) + " scale labels");
  }
  if (reading.value == 0) return "0";

  const std::string& group_separator =
      style.figure_exact ? style.component_joiner : style.group_separator;
  std::string out;
  for (int index : EmittedGroupIndices(reading, direction)) {
    const DigitGroup& group = reading.groups[static_cast<std::size_t>(index)];
    std::string piece = direction == ReadingDirection::kRightToLeft
                            ? JoinComponents(group, style.component_joiner)
                            : std::to_string(group.value);
    piece += GroupLabel(scale_labels, index);
    if (!out.empty()) {
      out += direction == ReadingDirection::kRightToLeft ? group_separator
                                                          : " ";
    }
    out += piece;
  }
  return out;
}

}  // namespace abjad
