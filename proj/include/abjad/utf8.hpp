#ifndef ABJAD_UTF8_HPP_
#define ABJAD_UTF8_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace abjad::utf8 {

// Throws Error(kInvalidEncoding) on malformed or overlong sequences and on
// surrogate codepoints.
std::u32string Decode(std::string_view text);

void Append(std::string& out, char32_t cp);
std::string Encode(char32_t cp);
std::string Encode(std::u32string_view cps);

// "U+0645"
std::string FormatCodepoint(char32_t cp);

bool IsWhitespace(char32_t cp);

// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> SplitWords(std::string_view text);

}  // namespace abjad::utf8

#endif  // ABJAD_UTF8_HPP_
