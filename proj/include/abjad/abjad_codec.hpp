#ifndef ABJAD_ABJAD_CODEC_HPP_
#define ABJAD_ABJAD_CODEC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abjad/core_tables.hpp"

namespace abjad {

// Largest value with a canonical letter-word: 1999 in Arabic (up to the
// thousands letter), 499 in Hebrew (up to Tav).
int MaxEncodable(AlphabetId alphabet);

// A canonical letter-word. Letters are held in ascending value order, which
// is the logical (memory) order: the units letter comes first and so is
// displayed rightmost in right-to-left script.
struct AbjadNumeral {
  AlphabetId alphabet = AlphabetId::kArabic;
  std::vector<Letter> letters;
  int value = 0;

  std::string text() const;
};

AbjadNumeral encode(std::int64_t n, AlphabetId alphabet);

enum class DecodeMode { kLax, kStrict };

// Lax mode sums the letters in any order. Strict mode also requires the
// canonical form that encode() produces. Whitespace, combining marks and
// the tatweel are ignored.
int decode(std::string_view word, AlphabetId alphabet,
           DecodeMode mode = DecodeMode::kLax);

struct GematriaOptions {
  // When set, punctuation (ASCII, Arabic and Hebrew) contributes nothing
  // instead of raising UnknownLetter.
  bool ignore_punctuation = false;
};

struct GematriaResult {
  std::int64_t total = 0;
  std::vector<std::pair<std::string, std::int64_t>> per_word;
};

GematriaResult gematria(std::string_view phrase, AlphabetId alphabet,
                        const GematriaOptions& options = {});

// Vowel marks, cantillation, tatweel and zero-width joiners.
bool IsIgnorableMark(char32_t cp);
bool IsPunctuation(char32_t cp);

}  // namespace abjad

#endif  // ABJAD_ABJAD_CODEC_HPP_
