#ifndef ABJAD_CORE_TABLES_HPP_
#define ABJAD_CORE_TABLES_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abjad {

enum class AlphabetId { kArabic, kHebrew };

std::string_view AlphabetName(AlphabetId id);  // "arabic" / "hebrew"
std::optional<AlphabetId> ParseAlphabetName(std::string_view name);

struct Letter {
  char32_t primary = 0;
  // Final or alternate forms carrying the same value.
  std::vector<char32_t> variants;
  std::string name;
  std::string sound;
  int value = 0;
  int order = 0;  // 1-based position in the Abjadi order
  AlphabetId alphabet = AlphabetId::kArabic;

  bool HasCodepoint(char32_t cp) const;
  // UTF-8 of the primary codepoint.
  std::string text() const;
};

inline constexpr std::size_t kAbjadiSequenceSize = 28;
using AbjadiSequence = std::array<int, kAbjadiSequenceSize>;

// {1..9, 10..90, 100..900, 1000}
const AbjadiSequence& abjadi_sequence();
bool IsAbjadiValue(int value);

// An immutable alphabet table. Construction validates every table
// invariant and throws Error(kTableFormat) on the first violation.
class AlphabetTable {
 public:
  // Parses the tab-separated table format:
  //   order<TAB>letter<TAB>variants(comma-separated)<TAB>name<TAB>value
  // Blank lines and lines starting with '#' are skipped.
  static AlphabetTable Parse(AlphabetId id, std::string_view tsv);

  AlphabetId id() const { return id_; }
  std::span<const Letter> letters() const { return letters_; }
  int max_value() const { return letters_.back().value; }

  const Letter* FindByCodepoint(char32_t cp) const;
  const Letter* FindByValue(int value) const;
  const Letter* FindByName(std::string_view name) const;

 private:
  AlphabetTable(AlphabetId id, std::vector<Letter> letters)
      : id_(id), letters_(std::move(letters)) {}

  AlphabetId id_;
  std::vector<Letter> letters_;
};

// The embedded tables, parsed on first use.
const AlphabetTable& alphabet_table(AlphabetId id);

// Throws kNotAnAbjadiValue for values outside the sequence and
// kOutOfAlphabetRange for sequence values past the alphabet's last letter
// (Hebrew stops at 400).
const Letter& letter_by_value(AlphabetId alphabet, int value);

struct LetterValue {
  AlphabetId alphabet;
  int value;
};

// Resolves primary and variant codepoints of both alphabets. Throws
// kUnknownLetter otherwise.
LetterValue value_of_letter(char32_t cp);

}  // namespace abjad

#endif  // ABJAD_CORE_TABLES_HPP_
