#include "abjad/core_tables.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "abjad/error.hpp"
#include "abjad/utf8.hpp"
#include "embedded_data.hpp"

namespace abjad {
namespace {

constexpr AbjadiSequence kAbjadiSequence = {
    1,   2,   3,   4,   5,   6,   7,   8,   9,   10,  20,  30,  40,  50,
    60,  70,  80,  90,  100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

char32_t SingleCodepoint(std::string_view field, int line_no) {
  const std::u32string cps = utf8::Decode(field);
  if (cps.size() != 1) {
    throw Error(ErrorCode::kTableFormat,
                "line " + std::to_string(line_no) +
                    ": expected exactly one codepoint, got '" +
                    std::string(field) + "'");
  }
  return cps.front();
}

int ParseInt(std::string_view field, int line_no) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kTableFormat, "line " + std::to_string(line_no) +
                                             ": bad integer '" +
                                             std::string(field) + "'");
  }
  return value;
}

[[noreturn]] void Invalid(std::string_view what) {
  throw Error(ErrorCode::kTableFormat, std::string(what));
}

}  // namespace

std::string_view AlphabetName(AlphabetId id) {
  return id == AlphabetId::kArabic ? "arabic" : "hebrew";
}

std::optional<AlphabetId> ParseAlphabetName(std::string_view name) {
  if (name == "arabic") return AlphabetId::kArabic;
  if (name == "hebrew") return AlphabetId::kHebrew;
  return std::nullopt;
}

bool Letter::HasCodepoint(char32_t cp) const {
  return cp == primary ||
         std::find(variants.begin(), variants.end(), cp) != variants.end();
}

std::string Letter::text() const { return utf8::Encode(primary); }

const AbjadiSequence& abjadi_sequence() { return kAbjadiSequence; }

bool IsAbjadiValue(int value) {
  return std::binary_search(kAbjadiSequence.begin(), kAbjadiSequence.end(),
                            value);
}

AlphabetTable AlphabetTable::Parse(AlphabetId id, std::string_view tsv) {
  std::vector<Letter> letters;
  int line_no = 0;
  for (std::string_view line : SplitFields(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = SplitFields(line, '\t');
    if (fields.size() != 5) {
      throw Error(ErrorCode::kTableFormat,
                  "line " + std::to_string(line_no) + ": expected 5 fields");
    }
    Letter letter;
    letter.order = ParseInt(fields[0], line_no);
    letter.primary = SingleCodepoint(fields[1], line_no);
    if (!fields[2].empty()) {
      for (std::string_view v : SplitFields(fields[2], ',')) {
        letter.variants.push_back(SingleCodepoint(v, line_no));
      }
    }
    letter.name = std::string(fields[3]);
    // The tables carry one column for both the name and its sound.
    letter.sound = letter.name;
    letter.value = ParseInt(fields[4], line_no);
    letter.alphabet = id;
    letters.push_back(std::move(letter));
  }

  if (letters.empty()) Invalid("table has no letters");
  if (letters.size() > kAbjadiSequenceSize) Invalid("too many letters");
  std::set<char32_t> seen;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    if (l.order != static_cast<int>(i) + 1) {
      Invalid("letter " + l.name + ": order index out of sequence");
    }
    if (!IsAbjadiValue(l.value)) {
      Invalid("letter " + l.name + ": value " + std::to_string(l.value) +
              " is not an Abjadi value");
    }
    // Letter k carries the k-th member of the sequence.
    if (l.value != kAbjadiSequence[i]) {
      Invalid("letter " + l.name + ": value does not match its order");
    }
    if (!seen.insert(l.primary).second) {
      Invalid("duplicate codepoint " + utf8::FormatCodepoint(l.primary));
    }
    for (char32_t v : l.variants) {
      if (!seen.insert(v).second) {
        Invalid("duplicate codepoint " + utf8::FormatCodepoint(v));
      }
    }
  }
  return AlphabetTable(id, std::move(letters));
}

const Letter* AlphabetTable::FindByCodepoint(char32_t cp) const {
  for (const Letter& l : letters_) {
    if (l.HasCodepoint(cp)) return &l;
  }
  return nullptr;
}

const Letter* AlphabetTable::FindByValue(int value) const {
  const auto it = std::lower_bound(
      letters_.begin(), letters_.end(), value,
      [](const Letter& l, int v) { return l.value < v; });
  return it != letters_.end() && it->value == value ? &*it : nullptr;
}

const Letter* AlphabetTable::FindByName(std::string_view name) const {
  for (const Letter& l : letters_) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

const AlphabetTable& alphabet_table(AlphabetId id) {
  static const AlphabetTable arabic =
      AlphabetTable::Parse(AlphabetId::kArabic, internal::kArabicTableTsv);
  static const AlphabetTable hebrew =
      AlphabetTable::Parse(AlphabetId::kHebrew, internal::kHebrewTableTsv);
  return id == AlphabetId::kArabic ? arabic : hebrew;
}

const Letter& letter_by_value(AlphabetId alphabet, int value) {
  if (!IsAbjadiValue(value)) {
    throw Error(ErrorCode::kNotAnAbjadiValue,
                std::to_string(value) + " is not in the Abjadi sequence");
  }
  const AlphabetTable& table = alphabet_table(alphabet);
  const Letter* letter = table.FindByValue(value);
  if (letter == nullptr) {
    throw Error(ErrorCode::kOutOfAlphabetRange,
                std::to_string(value) + " exceeds the " +
                    std::string(AlphabetName(alphabet)) + " maximum of " +
                    std::to_string(table.max_value()));
  }
  return *letter;
}

LetterValue value_of_letter(char32_t cp) {
  for (AlphabetId id : {AlphabetId::kArabic, AlphabetId::kHebrew}) {
    if (const Letter* l = alphabet_table(id).FindByCodepoint(cp)) {
      return {id, l->value};
    }
  }
  throw Error(ErrorCode::kUnknownLetter,
              utf8::FormatCodepoint(cp) + " is not an Arabic or Hebrew letter");
}

}  // namespace abjad
