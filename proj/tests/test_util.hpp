#ifndef ABJAD_TESTS_TEST_UTIL_HPP_
#define ABJAD_TESTS_TEST_UTIL_HPP_

#include <optional>

#include "abjad/error.hpp"

namespace abjad::testing {

// The error code `fn` throws, or nullopt if it returns normally.
template <typename Fn>
std::optional<ErrorCode> ErrorCodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace abjad::testing

#endif  // ABJAD_TESTS_TEST_UTIL_HPP_
