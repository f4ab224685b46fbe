#ifndef ABJAD_ERROR_HPP_
#define ABJAD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace abjad {

// Domain error classes. The names are part of the CLI contract
// ("ERROR <code>: <detail>"), so do not rename them.
enum class ErrorCode {
  kNotAnAbjadiValue,
  kOutOfAlphabetRange,
  kUnknownLetter,
  kOutOfRange,
  kZeroUnencodable,
  kNonCanonical,
  kEmptyInput,
  kInvalidGlyph,
  kUnsupportedBase,
  kInsufficientLabels,
  kPreEpoch,
  kInvalidEncoding,
  kTableFormat,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return ErrorCodeName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace abjad

#endif  // ABJAD_ERROR_HPP_
