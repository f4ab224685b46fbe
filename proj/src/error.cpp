#include "abjad/error.hpp"

namespace abjad {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAnAbjadiValue:
      return "NotAnAbjadiValue";
    case ErrorCode::kOutOfAlphabetRange:
      return "OutOfAlphabetRange";
    case ErrorCode::kUnknownLetter:
      return "UnknownLetter";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kZeroUnencodable:
      return "ZeroUnencodable";
    case ErrorCode::kNonCanonical:
      return "NonCanonical";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kInvalidGlyph:
      return "InvalidGlyph";
    case ErrorCode::kUnsupportedBase:
      return "UnsupportedBase";
    case ErrorCode::kInsufficientLabels:
      return "InsufficientLabels";
    case ErrorCode::kPreEpoch:
      return "PreEpoch";
    case ErrorCode::kInvalidEncoding:
      return "InvalidEncoding";
    case ErrorCode::kTableFormat:
      return "TableFormat";
  }
  return "Unknown";
}

}  // namespace abjad
