#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "abjad/abjad_codec.hpp"
#include "abjad/cli.hpp"
#include "abjad/digit_scripts.hpp"
#include "abjad/reading.hpp"

namespace abjad {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("cli: worked examples") {
  Outcome r = RunCli({"encode", "--alphabet", "arabic", "1245"});
  CHECK(r.code == 0);
  CHECK(r.out == "همرغ\n");
  CHECK(r.err.empty());

  r = RunCli({"gematria", "--alphabet", "arabic", "احمد زينب"});
  CHECK(r.code == 0);
  CHECK(r.out == "122\n");

  r = RunCli({"encode", "--alphabet", "hebrew", "500"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("ERROR OutOfRange: ", 0) == 0);
}

TEST_CASE("cli: output matches the library byte for byte") {
  CHECK(RunCli({"encode", "--alphabet", "hebrew", "499"}).out ==
        encode(499, AlphabetId::kHebrew).text() + "\n");
  CHECK(RunCli({"decode", "--strict", "همرغ"}).out == "1245\n");
  CHECK(RunCli({"decode", "غرمه"}).out == "1245\n");
  CHECK(RunCli({"translit", "--from", "western", "--to", "mashreki", "1225"}).out ==
        transliterate("1225", DigitScript::kWestern,
                      DigitScript::kMashrekiEastern) + "\n");
  CHECK(RunCli({"translit", "--from", "original", "--to", "western", "45"}).out ==
        "54\n");
  CHECK(RunCli({"read", "--direction", "ltr", "12457892"}).out ==
        "12 millions 457 mille 892\n");
  CHECK(RunCli({"read", "12457892"}).out ==
        "2 et 90 et 800 ; 7 et 50 et 400 mille ; 2 et 10 millions\n");
  CHECK(RunCli({"read", "--figure-exact", "12457892"}).out ==
        "2 et 90 et 800 et 7 et 50 et 400 mille et 2 et 10 millions\n");
  CHECK(RunCli({"read", "--labels", ",k,M", "--direction", "ltr", "12457892"}).out ==
        "12 M 457 k 892\n");
  CHECK(RunCli({"read", "--script", "mashreki", "--direction", "ltr", "١٢٢٥"}).out ==
        "1 mille 225\n");
  CHECK(RunCli({"hijri", "1225"}).out == "1810\n");
  CHECK(RunCli({"hijri", "--reverse", "1810"}).out == "1225\n");
  CHECK(RunCli({"provenance", "--script", "mashreki", "6"}).out.rfind(
            "hebrew\tו\tVav\t", 0) == 0);
  CHECK(RunCli({"provenance", "0"}).out.rfind("arabic\tص\tSad\t", 0) == 0);
}

TEST_CASE("cli: stdin input") {
  CHECK(RunCli({"encode"}, "1245\n").out == "همرغ\n");
  CHECK(RunCli({"gematria"}, "احمد زينب\n").out == "122\n");
  CHECK(RunCli({"translit", "--to", "mashreki"}, "1225\n").out == "١٢٢٥\n");
}

TEST_CASE("cli: json output") {
  const Outcome r = RunCli({"--json", "gematria", "احمد زينب"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 122);
  CHECK(j["per_word"][0]["word"] == "احمد");
  CHECK(j["per_word"][0]["value"] == 53);
  CHECK(j["per_word"][1]["value"] == 69);

  const auto e = nlohmann::json::parse(
      RunCli({"encode", "--json", "--alphabet", "arabic", "1245"}).out);
  CHECK(e["text"] == "همرغ");
  CHECK(e["letters"].size() == 4);
  CHECK(e["letters"][3]["name"] == "Ghin");

  const auto rd = nlohmann::json::parse(RunCli({"read", "--json", "1000"}).out);
  CHECK(rd["groups"].size() == 2);
  CHECK(rd["groups"][1]["components"][0] == 1);
}

TEST_CASE("cli: every domain error class exits 1") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"encode", "--alphabet", "arabic", "2000"}, "OutOfRange"},
      {{"encode", "0"}, "ZeroUnencodable"},
      {{"decode", "abc"}, "UnknownLetter"},
      {{"gematria", "hello"}, "UnknownLetter"},
      {{"translit", "--to", "mashreki", "12٣"}, "InvalidGlyph"},
      {{"read", "12a"}, "InvalidGlyph"},
      {{"decode", "--strict", "غرمه"}, "NonCanonical"},
      {{"hijri", "--reverse", "600"}, "PreEpoch"},
      {{"read", "--labels", "", "1000"}, "InsufficientLabels"},
      {{"provenance", "12"}, "OutOfRange"},
  };
  for (const auto& [args, code] : cases) {
    const Outcome r = RunCli(args);
    CAPTURE(code);
    CHECK(r.code == 1);
    CHECK(r.err.rfind("ERROR " + code + ": ", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(RunCli({}).code == 2);
  CHECK(RunCli({"frobnicate"}).code == 2);
  CHECK(RunCli({"encode", "--alphabet", "greek", "5"}).code == 2);
  CHECK(RunCli({"encode", "twelve"}).code == 2);
  CHECK(RunCli({"translit", "12"}).code == 2);  // --to is required
  CHECK(RunCli({"read", "--direction", "up", "5"}).code == 2);
  const Outcome r = RunCli({"encode", "1", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("ERROR Usage: ", 0) == 0);
  CHECK(RunCli({"--help"}).code == 0);
}

}  // namespace
}  // namespace abjad
