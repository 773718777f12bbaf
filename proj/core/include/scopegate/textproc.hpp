#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace scopegate {

struct TokenStream {
  std::vector<std::string> tokens;
  std::string source_id;
};

// Which part of a document feeds the bag-of-words pipeline. Portions are cut
// from the raw token order, before stopword removal and stemming.
struct PortionMode {
  enum class Kind { All, First, FirstLast };

  Kind kind = Kind::All;
  int x = 0;  // token budget per end; > 0 for First/FirstLast

  static PortionMode all() { return {Kind::All, 0}; }
  static PortionMode first(int x) { return {Kind::First, x}; }
  static PortionMode first_last(int x) { return {Kind::FirstLast, x}; }

  // "all", "first-100", "first+last-100"; parse() accepts the same forms.
  std::string to_string() const;
  static PortionMode parse(std::string_view text);

  bool operator==(const PortionMode&) const = default;
};

// Lowercases, splits on whitespace (ASCII plus the common Unicode space
// codepoints), strips leading/trailing punctuation from each token, and drops
// tokens that end up empty. Digits and interior punctuation (hyphens,
// apostrophes) survive, so "state-of-the-art" and "2008" come through whole.
TokenStream tokenize(std::string_view text, std::string source_id = "");

// First(X): first min(X, len) tokens. FirstLast(X): first X plus last X in
// document order, or the whole stream when it is shorter than 2*X; no token
// position is ever emitted twice.
TokenStream take_portion(const TokenStream& stream, const PortionMode& mode);

// Stopword removal, then removal of tokens with no alphanumeric character,
// then Porter stemming. Tokens are expected lowercase (tokenize() output).
TokenStream preprocess(const TokenStream& stream,
                       const std::unordered_set<std::string>& stopwords);

// One token per line, UTF-8, '#' starts a comment, blank lines ignored.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& file);

// The built-in English function-word list (the contents of the shipped
// stopwords_en.txt), in file order.
const std::vector<std::string>& default_stopword_list();
std::unordered_set<std::string> default_stopwords();

}  // namespace scopegate
