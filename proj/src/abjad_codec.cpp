#include "abjad/abjad_codec.hpp"

#include "abjad/error.hpp"
#include "abjad/utf8.hpp"

namespace abjad {
namespace {

// 0 = units, 1 = tens, 2 = hundreds, 3 = thousands.
int RankBand(int value) {
  if (value < 10) return 0;
  if (value < 100) return 1;
  if (value < 1000) return 2;
  return 3;
}

std::string AlphabetLabel(AlphabetId alphabet) {
  return std::string(AlphabetName(alphabet));
}

// Resolves every non-ignorable codepoint of `word` to a letter of
// `alphabet`.
std::vector<const Letter*> ResolveLetters(std::string_view word,
                                          AlphabetId alphabet,
                                          bool skip_punctuation) {
  const AlphabetTable& table = alphabet_table(alphabet);
  std::vector<const Letter*> letters;
  for (char32_t cp : utf8::Decode(word)) {
    if (utf8::IsWhitespace(cp) || IsIgnorableMark(cp)) continue;
    if (skip_punctuation && IsPunctuation(cp)) continue;
    const Letter* letter = table.FindByCodepoint(cp);
    if (letter == nullptr) {
      throw Error(ErrorCode::kUnknownLetter,
                  utf8::FormatCodepoint(cp) + " '" + utf8::Encode(cp) +
                      "' is not a " + AlphabetLabel(alphabet) + " letter");
    }
    letters.push_back(letter);
  }
  return letters;
}

}  // namespace

int MaxEncodable(AlphabetId alphabet) {
  return alphabet == AlphabetId::kArabic ? 1999 : 499;
}

std::string AbjadNumeral::text() const {
  std::string out;
  for (const Letter& l : letters) utf8::Append(out, l.primary);
  return out;
}

AbjadNumeral encode(std::int64_t n, AlphabetId alphabet) {
  if (n == 0) {
    throw Error(ErrorCode::kZeroUnencodable,
                "zero has no Abjadi value and cannot be written in letters");
  }
  const int max = MaxEncodable(alphabet);
  if (n < 1 || n > max) {
    throw Error(ErrorCode::kOutOfRange,
                std::to_string(n) + " is outside 1.." + std::to_string(max) +
                    " for " + AlphabetLabel(alphabet));
  }

  AbjadNumeral numeral;
  numeral.alphabet = alphabet;
  numeral.value = static_cast<int>(n);
  int remaining = numeral.value;
  for (int scale = 1; remaining > 0; scale *= 10) {
    const int component = (remaining % 10) * scale;
    remaining /= 10;
    if (component != 0) {
      numeral.letters.push_back(letter_by_value(alphabet, component));
    }
  }
  return numeral;
}

int decode(std::string_view word, AlphabetId alphabet, DecodeMode mode) {
  const std::vector<const Letter*> letters =
      ResolveLetters(word, alphabet, /*skip_punctuation=*/false);
  if (letters.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no letters to decode");
  }

  int sum = 0;
  for (const Letter* l : letters) sum += l->value;
  if (mode == DecodeMode::kLax) return sum;

  int previous_band = -1;
  for (const Letter* l : letters) {
    const int band = RankBand(l->value);
    if (band <= previous_band) {
      throw Error(ErrorCode::kNonCanonical,
                  "letters must ascend with one letter per rank; '" +
                      l->text() + "' (" + std::to_string(l->value) +
                      ") is out of place");
    }
    previous_band = band;
  }
  if (sum > MaxEncodable(alphabet)) {
    throw Error(ErrorCode::kNonCanonical,
                std::to_string(sum) + " exceeds the canonical range");
  }
  return sum;
}

GematriaResult gematria(std::string_view phrase, AlphabetId alphabet,
                        const GematriaOptions& options) {
  GematriaResult result;
  for (std::string& word : utf8::SplitWords(phrase)) {
    std::int64_t value = 0;
    for (const Letter* l :
         ResolveLetters(word, alphabet, options.ignore_punctuation)) {
      value += l->value;
    }
    result.total += value;
    result.per_word.emplace_back(std::move(word), value);
  }
  return result;
}

bool IsIgnorableMark(char32_t cp) {
  // Arabic harakat, tanwin, shadda, sukun, small high marks.
  if (cp >= 0x064B && cp <= 0x065F) return true;
  if (cp == 0x0670) return true;                   // superscript alef
  if (cp >= 0x06D6 && cp <= 0x06ED) return true;   // Quranic annotation
  if (cp >= 0x0610 && cp <= 0x061A) return true;
  if (cp == 0x0640) return true;                   // tatweel
  // Hebrew points and cantillation (maqaf, paseq and sof pasuq excluded).
  if (cp >= 0x0591 && cp <= 0x05BD) return true;
  if (cp == 0x05BF || cp == 0x05C1 || cp == 0x05C2 || cp == 0x05C4 ||
      cp == 0x05C5 || cp == 0x05C7) {
    return true;
  }
  if (cp >= 0x0300 && cp <= 0x036F) return true;   // generic combining
  // ZWNJ, ZWJ, LRM, RLM, ALM
  return cp == 0x200C || cp == 0x200D || cp == 0x200E || cp == 0x200F ||
         cp == 0x061C;
}

bool IsPunctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0x060C:  // Arabic comma
    case 0x061B:  // Arabic semicolon
    case 0x061F:  // Arabic question mark
    case 0x066A:  // Arabic percent
    case 0x066B:
    case 0x066C:
    case 0x066D:
    case 0x06D4:  // Arabic full stop
    case 0x05BE:  // maqaf
    case 0x05C0:  // paseq
    case 0x05C3:  // sof pasuq
    case 0x05F3:  // geresh
    case 0x05F4:  // gershayim
    case 0x00AB:
    case 0x00BB:
    case 0x2013:
    case 0x2014:
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2026:
      return true;
    default:
      return false;
  }
}

}  // namespace abjad
