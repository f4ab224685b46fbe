#include "abjad/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abjad/abjad_codec.hpp"
#include "abjad/chronology.hpp"
#include "abjad/digit_scripts.hpp"
#include "abjad/error.hpp"
#include "abjad/reading.hpp"

namespace abjad::cli {
namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

struct Options {
  std::string alphabet = "arabic";
  std::string script = "western";
  std::string from = "western";
  std::string to = "western";
  std::string direction = "rtl";
  std::string labels;
  bool labels_given = false;
  bool strict = false;
  bool figure_exact = false;
  bool reverse = false;
  bool ignore_punctuation = false;
  bool as_json = false;
  std::optional<std::string> input;
};

std::string Trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string ReadInput(const Options& opts, std::istream& in) {
  if (opts.input) return *opts.input;
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::int64_t ParseInteger(const std::string& raw) {
  const std::string text = Trim(raw);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError{"expected an integer, got '" + text + "'"};
  }
  return value;
}

AlphabetId Alphabet(const Options& opts) {
  return *ParseAlphabetName(opts.alphabet);
}

DigitScript Script(const std::string& name) {
  return *ParseDigitScriptName(name);
}

std::vector<std::string> SplitLabels(const std::string& labels) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = labels.find(',', start);
    out.push_back(labels.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

json LetterJson(const Letter& l) {
  return {{"letter", l.text()},
          {"name", l.name},
          {"value", l.value},
          {"order", l.order}};
}

void Emit(std::ostream& out, const Options& opts, const std::string& bare,
          json structured) {
  if (opts.as_json) {
    out << structured.dump() << '\n';
  } else {
    out << bare << '\n';
  }
}

void RunEncode(const Options& opts, std::istream& in, std::ostream& out) {
  const AbjadNumeral numeral =
      encode(ParseInteger(ReadInput(opts, in)), Alphabet(opts));
  json letters = json::array();
  for (const Letter& l : numeral.letters) letters.push_back(LetterJson(l));
  Emit(out, opts, numeral.text(),
       {{"command", "encode"},
        {"alphabet", opts.alphabet},
        {"value", numeral.value},
        {"text", numeral.text()},
        {"letters", letters}});
}

void RunDecode(const Options& opts, std::istream& in, std::ostream& out) {
  const std::string word = Trim(ReadInput(opts, in));
  const int value = decode(word, Alphabet(opts),
                           opts.strict ? DecodeMode::kStrict : DecodeMode::kLax);
  Emit(out, opts, std::to_string(value),
       {{"command", "decode"},
        {"alphabet", opts.alphabet},
        {"strict", opts.strict},
        {"text", word},
        {"value", value}});
}

void RunGematria(const Options& opts, std::istream& in, std::ostream& out) {
  GematriaOptions gopts;
  gopts.ignore_punctuation = opts.ignore_punctuation;
  const GematriaResult result =
      gematria(ReadInput(opts, in), Alphabet(opts), gopts);
  json per_word = json::array();
  for (const auto& [word, value] : result.per_word) {
    per_word.push_back({{"word", word}, {"value", value}});
  }
  Emit(out, opts, std::to_string(result.total),
       {{"command", "gematria"},
        {"alphabet", opts.alphabet},
        {"total", result.total},
        {"per_word", per_word}});
}

void RunTranslit(const Options& opts, std::istream& in, std::ostream& out) {
  std::string text = ReadInput(opts, in);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  const std::string result =
      transliterate(text, Script(opts.from), Script(opts.to));
  Emit(out, opts, result,
       {{"command", "translit"},
        {"from", opts.from},
        {"to", opts.to},
        {"input", text},
        {"text", result}});
}

void RunRead(const Options& opts, std::istream& in, std::ostream& out) {
  const std::string text = Trim(ReadInput(opts, in));
  if (text.empty()) throw UsageError{"expected a number to read"};
  const NumberReading reading = decompose(parse_digits(text, Script(opts.script)));
  const auto direction = opts.direction == "ltr"
                             ? ReadingDirection::kLeftToRight
                             : ReadingDirection::kRightToLeft;
  const std::vector<std::string> labels =
      opts.labels_given ? SplitLabels(opts.labels) : DefaultScaleLabels();
  ReadingStyle style;
  style.figure_exact = opts.figure_exact;
  const std::string result = format_reading(reading, direction, labels, style);

  json groups = json::array();
  for (const DigitGroup& g : reading.groups) {
    json components = json::array();
    for (const RankComponent& c : g.components) components.push_back(c.value);
    groups.push_back(
        {{"index", g.index}, {"value", g.value}, {"components", components}});
  }
  Emit(out, opts, result,
       {{"command", "read"},
        {"value", reading.value},
        {"direction", opts.direction},
        {"groups", groups},
        {"text", result}});
}

void RunProvenance(const Options& opts, std::istream& in, std::ostream& out) {
  const std::int64_t digit = ParseInteger(ReadInput(opts, in));
  if (digit < 0 || digit > 9) {
    throw Error(ErrorCode::kOutOfRange,
                "digit " + std::to_string(digit) + " is outside 0..9");
  }
  const DigitProvenance& p =
      digit_provenance(static_cast<int>(digit), Script(opts.script));
  const std::string alphabet(AlphabetName(p.source_alphabet));
  Emit(out, opts,
       alphabet + '\t' + p.source_letter.text() + '\t' + p.source_letter.name +
           '\t' + p.note,
       {{"command", "provenance"},
        {"script", opts.script},
        {"digit", p.digit},
        {"source_alphabet", alphabet},
        {"source_letter", LetterJson(p.source_letter)},
        {"note", p.note}});
}

void RunHijri(const Options& opts, std::istream& in, std::ostream& out) {
  const std::int64_t year = ParseInteger(ReadInput(opts, in));
  std::int64_t result = 0;
  if (opts.reverse) {
    result = gregorian_to_hijri_year(YearCE{year}).year;
  } else {
    result = hijri_to_gregorian_year(YearAH{year}).year;
  }
  Emit(out, opts, std::to_string(result),
       {{"command", "hijri"},
        {"reverse", opts.reverse},
        {opts.reverse ? "ce" : "ah", year},
        {opts.reverse ? "ah" : "ce", result}});
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Abjad numerals, gematria and historical digit scripts",
               "abjad"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;

  const std::vector<std::string> alphabets = {"arabic", "hebrew"};
  const std::vector<std::string> scripts = {"western", "mashreki", "original"};

  app.add_flag("--json", opts.as_json, "Emit one JSON object");

  const auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", opts.alphabet, "arabic or hebrew")
        ->check(CLI::IsMember(alphabets))
        ->capture_default_str();
  };
  const auto add_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", opts.input, what + " (read from stdin if absent)");
  };

  auto* enc = app.add_subcommand("encode", "Integer to abjad letter-word");
  add_alphabet(enc);
  add_input(enc, "Integer");

  auto* dec = app.add_subcommand("decode", "Abjad letter-word to integer");
  add_alphabet(dec);
  dec->add_flag("--strict", opts.strict, "Require the canonical form");
  add_input(dec, "Letter-word");

  auto* gem = app.add_subcommand("gematria", "Sum letter values of a phrase");
  add_alphabet(gem);
  gem->add_flag("--ignore-punctuation", opts.ignore_punctuation,
                "Skip punctuation instead of failing");
  add_input(gem, "Phrase");

  auto* tr = app.add_subcommand("translit", "Convert digits between scripts");
  tr->add_option("--from", opts.from, "Source script")
      ->check(CLI::IsMember(scripts))
      ->capture_default_str();
  tr->add_option("--to", opts.to, "Target script")
      ->check(CLI::IsMember(scripts))
      ->required();
  add_input(tr, "Digit text");

  auto* rd = app.add_subcommand("read", "Rank-component reading of a number");
  rd->add_option("--direction", opts.direction, "rtl or ltr")
      ->check(CLI::IsMember({"rtl", "ltr"}))
      ->capture_default_str();
  rd->add_option("--labels", opts.labels,
                 "Comma-separated scale labels, first usually empty");
  rd->add_flag("--figure-exact", opts.figure_exact,
               "Join groups with 'et' as well");
  rd->add_option("--script", opts.script, "Script of the input digits")
      ->check(CLI::IsMember(scripts))
      ->capture_default_str();
  add_input(rd, "Number");

  auto* prov = app.add_subcommand("provenance", "Letter source of a digit");
  prov->add_option("--script", opts.script, "Digit script")
      ->check(CLI::IsMember(scripts))
      ->capture_default_str();
  add_input(prov, "Digit 0..9");

  auto* hij = app.add_subcommand("hijri", "Hijri to Gregorian year");
  hij->add_flag("--reverse", opts.reverse, "Gregorian to Hijri instead");
  add_input(hij, "Year");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR Usage: " << e.what() << '\n';
    return kExitUsage;
  }
  opts.labels_given = rd->count("--labels") > 0;

  try {
    if (enc->parsed()) RunEncode(opts, in, out);
    else if (dec->parsed()) RunDecode(opts, in, out);
    else if (gem->parsed()) RunGematria(opts, in, out);
    else if (tr->parsed()) RunTranslit(opts, in, out);
    else if (rd->parsed()) RunRead(opts, in, out);
    else if (prov->parsed()) RunProvenance(opts, in, out);
    else if (hij->parsed()) RunHijri(opts, in, out);
  } catch (const UsageError& e) {
    err << "ERROR Usage: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ERROR " << e.code_name() << ": " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace abjad::cli
