#ifndef ABJAD_SRC_EMBEDDED_DATA_HPP_
#define ABJAD_SRC_EMBEDDED_DATA_HPP_

#include <string_view>

// Contents of data/*.tsv, compiled in by CMake.
namespace abjad::internal {

extern const std::string_view kArabicTableTsv;
extern const std::string_view kHebrewTableTsv;
extern const std::string_view kProvenanceTsv;

}  // namespace abjad::internal

#endif  // ABJAD_SRC_EMBEDDED_DATA_HPP_
