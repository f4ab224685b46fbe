#ifndef ABJAD_DIGIT_SCRIPTS_HPP_
#define ABJAD_DIGIT_SCRIPTS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abjad/core_tables.hpp"

namespace abjad {

enum class DigitScript { kWestern, kMashrekiEastern, kOriginalMaghrebi };

inline constexpr DigitScript kAllDigitScripts[] = {
    DigitScript::kWestern, DigitScript::kMashrekiEastern,
    DigitScript::kOriginalMaghrebi};

std::string_view DigitScriptName(DigitScript script);  // western/mashreki/original
std::optional<DigitScript> ParseDigitScriptName(std::string_view name);

// The original Maghrebi forms have no Unicode encoding. They are written
// with ASCII proxy glyphs in which the shapes for 4 and 5 are swapped:
// value 4 is drawn as '5' and value 5 as '4'. A proxy string means nothing
// without its script, so the tagged form below is what the API hands out
// wherever the script could otherwise be lost.
struct ScriptedDigits {
  DigitScript script = DigitScript::kWestern;
  std::string text;
};

// Glyph (as a codepoint) for a digit value 0..9.
char32_t DigitGlyph(int value, DigitScript script);
// Value for a glyph, or nullopt when the glyph is not in the script.
std::optional<int> GlyphValue(char32_t glyph, DigitScript script);

std::string render_digits(std::uint64_t n, DigitScript script);
ScriptedDigits render_tagged(std::uint64_t n, DigitScript script);

// Throws kInvalidGlyph for anything outside the script's ten glyphs
// (including an empty string) and kOutOfRange on 64-bit overflow.
std::uint64_t parse_digits(std::string_view text, DigitScript script);
std::uint64_t parse_digits(const ScriptedDigits& digits);

// Space, period, comma, hyphen and slash pass through unchanged.
bool IsDigitSeparator(char32_t cp);

std::string transliterate(std::string_view text, DigitScript from,
                          DigitScript to);

struct DigitProvenance {
  int digit = 0;
  DigitScript script = DigitScript::kWestern;
  AlphabetId source_alphabet = AlphabetId::kArabic;
  Letter source_letter;
  std::string note;
};

// Throws kOutOfRange for digits outside 0..9.
const DigitProvenance& digit_provenance(int digit, DigitScript script);

// Parses the provenance table format
//   script<TAB>digit<TAB>alphabet<TAB>letterName<TAB>note
// and checks that every (script, digit) pair appears exactly once.
std::vector<DigitProvenance> ParseProvenanceTable(std::string_view tsv);

// First `base` entries of 0-9 followed by A-F. Throws kUnsupportedBase
// outside 2..16.
std::vector<char> base_digit_set(int base);

}  // namespace abjad

#endif  // ABJAD_DIGIT_SCRIPTS_HPP_
