#include <doctest.h>

#include "abjad/error.hpp"
#include "abjad/utf8.hpp"

namespace abjad {
namespace {

TEST_CASE("utf8 decodes mixed-width text") {
  const std::u32string cps = utf8::Decode("aمת\U0001F600");
  REQUIRE(cps.size() == 4);
  CHECK(cps[0] == U'a');
  CHECK(cps[1] == 0x0645);
  CHECK(cps[2] == 0x05EA);
  CHECK(cps[3] == 0x1F600);
  CHECK(utf8::Encode(cps) == "aمת\U0001F600");
}

TEST_CASE("utf8 rejects malformed input") {
  CHECK_THROWS_AS(utf8::Decode("\xC3"), Error);         // truncated
  CHECK_THROWS_AS(utf8::Decode("\xC0\xAF"), Error);     // overlong
  CHECK_THROWS_AS(utf8::Decode("\xED\xA0\x80"), Error); // surrogate
  CHECK_THROWS_AS(utf8::Decode("\xFF"), Error);
  try {
    utf8::Decode("ok\x80");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidEncoding);
  }
}

TEST_CASE("utf8 word split collapses whitespace runs") {
  const auto words = utf8::SplitWords("  احمد \t ز ");
  REQUIRE(words.size() == 2);
  CHECK(words[0] == "احمد");
  CHECK(words[1] == "ز");
  CHECK(utf8::SplitWords("   ").empty());
}

TEST_CASE("codepoint formatting") {
  CHECK(utf8::FormatCodepoint(0x0645) == "U+0645");
  CHECK(utf8::FormatCodepoint(U'X') == "U+0058");
}

}  // namespace
}  // namespace abjad
