#include "abjad/digit_scripts.hpp"

#include <array>
#include <charconv>
#include <limits>

#include "abjad/error.hpp"
#include "abjad/utf8.hpp"
#include "embedded_data.hpp"

namespace abjad {
namespace {

constexpr char32_t kArabicIndicZero = 0x0660;
constexpr std::string_view kBase16Glyphs = "0123456789ABCDEF";

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string_view::npos;
       start = pos + 1) {
    out.push_back(s.substr(start, pos - start));
  }
  out.push_back(s.substr(start));
  return out;
}

[[noreturn]] void BadProvenanceLine(int line_no, std::string_view why) {
  throw Error(ErrorCode::kTableFormat, "provenance line " +
                                           std::to_string(line_no) + ": " +
                                           std::string(why));
}

[[noreturn]] void ThrowInvalidGlyph(char32_t cp, DigitScript script) {
  throw Error(ErrorCode::kInvalidGlyph,
              utf8::FormatCodepoint(cp) + " '" + utf8::Encode(cp) +
                  "' is not a " + std::string(DigitScriptName(script)) +
                  " digit");
}

std::size_t ScriptIndex(DigitScript script) {
  return static_cast<std::size_t>(script);
}

using ProvenanceTable = std::array<std::array<DigitProvenance, 10>, 3>;

const ProvenanceTable& provenance_table() {
  static const ProvenanceTable table = [] {
    ProvenanceTable t;
    for (DigitProvenance& p : ParseProvenanceTable(internal::kProvenanceTsv)) {
      auto& slot = t[ScriptIndex(p.script)][p.digit];
      slot = std::move(p);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string_view DigitScriptName(DigitScript script) {
  switch (script) {
    case DigitScript::kWestern:
      return "western";
    case DigitScript::kMashrekiEastern:
      return "mashreki";
    case DigitScript::kOriginalMaghrebi:
      return "original";
  }
  return "western";
}

std::optional<DigitScript> ParseDigitScriptName(std::string_view name) {
  for (DigitScript s : kAllDigitScripts) {
    if (DigitScriptName(s) == name) return s;
  }
  return std::nullopt;
}

char32_t DigitGlyph(int value, DigitScript script) {
  if (value < 0 || value > 9) {
    throw Error(ErrorCode::kOutOfRange,
                "digit value " + std::to_string(value) + " is outside 0..9");
  }
  switch (script) {
    case DigitScript::kWestern:
      return U'0' + value;
    case DigitScript::kMashrekiEastern:
      return kArabicIndicZero + value;
    case DigitScript::kOriginalMaghrebi:
      if (value == 4) return U'5';
      if (value == 5) return U'4';
      return U'0' + value;
  }
  return U'0' + value;
}

std::optional<int> GlyphValue(char32_t glyph, DigitScript script) {
  switch (script) {
    case DigitScript::kWestern:
      if (glyph >= U'0' && glyph <= U'9') return static_cast<int>(glyph - U'0');
      break;
    case DigitScript::kMashrekiEastern:
      if (glyph >= kArabicIndicZero && glyph <= kArabicIndicZero + 9) {
        return static_cast<int>(glyph - kArabicIndicZero);
      }
      break;
    case DigitScript::kOriginalMaghrebi:
      if (glyph == U'4') return 5;
      if (glyph == U'5') return 4;
      if (glyph >= U'0' && glyph <= U'9') return static_cast<int>(glyph - U'0');
      break;
  }
  return std::nullopt;
}

std::string render_digits(std::uint64_t n, DigitScript script) {
  std::u32string glyphs;
  do {
    glyphs.insert(glyphs.begin(), DigitGlyph(static_cast<int>(n % 10), script));
    n /= 10;
  } while (n != 0);
  return utf8::Encode(glyphs);
}

ScriptedDigits render_tagged(std::uint64_t n, DigitScript script) {
  return {script, render_digits(n, script)};
}

std::uint64_t parse_digits(std::string_view text, DigitScript script) {
  const std::u32string cps = utf8::Decode(text);
  if (cps.empty()) {
    throw Error(ErrorCode::kInvalidGlyph, "empty digit string");
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 0;
  for (char32_t cp : cps) {
    const std::optional<int> digit = GlyphValue(cp, script);
    if (!digit) ThrowInvalidGlyph(cp, script);
    if (value > (kMax - static_cast<std::uint64_t>(*digit)) / 10) {
      throw Error(ErrorCode::kOutOfRange, "digit string overflows 64 bits");
    }
    value = value * 10 + static_cast<std::uint64_t>(*digit);
  }
  return value;
}

std::uint64_t parse_digits(const ScriptedDigits& digits) {
  return parse_digits(digits.text, digits.script);
}

bool IsDigitSeparator(char32_t cp) {
  return cp == U' ' || cp == U'.' || cp == U',' || cp == U'-' || cp == U'/';
}

std::string transliterate(std::string_view text, DigitScript from,
                          DigitScript to) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : utf8::Decode(text)) {
    if (IsDigitSeparator(cp)) {
      out.push_back(static_cast<char>(cp));
      continue;
    }
    const std::optional<int> digit = GlyphValue(cp, from);
    if (!digit) ThrowInvalidGlyph(cp, from);
    utf8::Append(out, DigitGlyph(*digit, to));
  }
  return out;
}

std::vector<DigitProvenance> ParseProvenanceTable(std::string_view tsv) {
  std::vector<DigitProvenance> rows;
  std::array<std::array<bool, 10>, 3> seen{};
  int line_no = 0;
  for (std::string_view line : Split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = Split(line, '\t');
    if (fields.size() != 5) BadProvenanceLine(line_no, "expected 5 fields");

    DigitProvenance p;
    const auto script = ParseDigitScriptName(fields[0]);
    if (!script) BadProvenanceLine(line_no, "unknown script");
    p.script = *script;

    const auto [ptr, ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), p.digit);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() ||
        p.digit < 0 || p.digit > 9) {
      BadProvenanceLine(line_no, "digit must be 0..9");
    }

    const auto alphabet = ParseAlphabetName(fields[2]);
    if (!alphabet) BadProvenanceLine(line_no, "unknown alphabet");
    p.source_alphabet = *alphabet;

    const Letter* letter = alphabet_table(*alphabet).FindByName(fields[3]);
    if (letter == nullptr) BadProvenanceLine(line_no, "unknown letter name");
    p.source_letter = *letter;
    p.note = std::string(fields[4]);

    bool& slot = seen[ScriptIndex(p.script)][p.digit];
    if (slot) BadProvenanceLine(line_no, "duplicate script/digit pair");
    slot = true;
    rows.push_back(std::move(p));
  }
  for (const auto& per_script : seen) {
    for (bool present : per_script) {
      if (!present) {
        throw Error(ErrorCode::kTableFormat,
                    "provenance table is missing a script/digit pair");
      }
    }
  }
  return rows;
}

const DigitProvenance& digit_provenance(int digit, DigitScript script) {
  if (digit < 0 || digit > 9) {
    throw Error(ErrorCode::kOutOfRange,
                "digit " + std::to_string(digit) + " is outside 0..9");
  }
  return provenance_table()[ScriptIndex(script)][digit];
}

std::vector<char> base_digit_set(int base) {
  if (base < 2 || base > 16) {
    throw Error(ErrorCode::kUnsupportedBase,
                "base " + std::to_string(base) + " is outside 2..16");
  }
  return {kBase16Glyphs.begin(), kBase16Glyphs.begin() + base};
}

}  // namespace abjad
