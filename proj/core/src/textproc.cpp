#include "scopegate/textproc.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "scopegate/stemmer.hpp"
#include "scopegate/unicode.hpp"

namespace scopegate {

uint32_t decode_utf8(std::string_view s, size_t& i) {
  const auto byte = [&](size_t k) { return static_cast<uint8_t>(s[k]); };
  uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  size_t len = 0;
  uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;  // stray continuation byte
  }
  if (i + len > s.size()) {
    ++i;
    return b0;
  }
  for (size_t k = 1; k < len; ++k) {
    uint8_t bk = byte(i + k);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_space_cp(uint32_t cp) {
  switch (cp) {
    case ' ':
    case '\t':
    case '\n':
    case '\v':
    case '\f':
    case '\r':
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0x1680:  // ogham space mark
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow NBSP
    case 0x205F:  // medium mathematical space
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_word_cp(uint32_t cp) {
  if (cp < 0x80) return is_ascii_alnum(cp);
  if (is_space_cp(cp)) return false;
  switch (cp) {
    case 0xAB:    // left guillemet
    case 0xBB:    // right guillemet
    case 0x2022:  // bullet
    case 0x2026:  // ellipsis
    case 0x2039:
    case 0x203A:
      return false;
    default:
      // general punctuation dashes and quotes
      if (cp >= 0x2010 && cp <= 0x201F) return false;
      return true;
  }
}

namespace {

// Lowercase ASCII letters, then strip leading/trailing non-word codepoints
// (interior hyphens, apostrophes, and digits survive). Returns an empty
// string when nothing word-like remains.
std::string finalize_token(std::string_view raw) {
  std::vector<uint32_t> cps;
  cps.reserve(raw.size());
  size_t i = 0;
  while (i < raw.size()) cps.push_back(ascii_lower(decode_utf8(raw, i)));

  size_t begin = 0, end = cps.size();
  while (begin < end && !is_word_cp(cps[begin])) ++begin;
  while (end > begin && !is_word_cp(cps[end - 1])) --end;
  if (begin == end) return {};

  std::string out;
  for (size_t k = begin; k < end; ++k) append_utf8(out, cps[k]);
  return out;
}

}  // namespace

TokenStream tokenize(std::string_view text, std::string source_id) {
  TokenStream stream;
  stream.source_id = std::move(source_id);
  size_t i = 0;
  size_t word_start = 0;
  bool in_word = false;
  while (i < text.size()) {
    size_t at = i;
    uint32_t cp = decode_utf8(text, i);
    if (is_space_cp(cp)) {
      if (in_word) {
        std::string tok = finalize_token(text.substr(word_start, at - word_start));
        if (!tok.empty()) stream.tokens.push_back(std::move(tok));
        in_word = false;
      }
    } else if (!in_word) {
      in_word = true;
      word_start = at;
    }
  }
  if (in_word) {
    std::string tok = finalize_token(text.substr(word_start));
    if (!tok.empty()) stream.tokens.push_back(std::move(tok));
  }
  return stream;
}

std::string PortionMode::to_string() const {
  switch (kind) {
    case Kind::All:
      return "all";
    case Kind::First:
      return "first-" + std::to_string(x);
    case Kind::FirstLast:
      return "first+last-" + std::to_string(x);
  }
  return "all";
}

PortionMode PortionMode::parse(std::string_view text) {
  if (text == "all") return all();
  const auto parse_x = [&](std::string_view rest) {
    int x = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), x);
    if (ec != std::errc() || p != rest.data() + rest.size() || x <= 0) {
      throw std::invalid_argument("bad portion mode: " + std::string(text));
    }
    return x;
  };
  if (text.starts_with("first+last-"))
    return first_last(parse_x(text.substr(11)));
  if (text.starts_with("firstlast-"))
    return first_last(parse_x(text.substr(10)));
  if (text.starts_with("first-")) return first(parse_x(text.substr(6)));
  throw std::invalid_argument("bad portion mode: " + std::string(text));
}

TokenStream take_portion(const TokenStream& stream, const PortionMode& mode) {
  const auto& t = stream.tokens;
  const size_t len = t.size();
  TokenStream out;
  out.source_id = stream.source_id;
  switch (mode.kind) {
    case PortionMode::Kind::All:
      out.tokens = t;
      break;
    case PortionMode::Kind::First: {
      const size_t n = std::min<size_t>(mode.x, len);
      out.tokens.assign(t.begin(), t.begin() + n);
      break;
    }
    case PortionMode::Kind::FirstLast: {
      const size_t x = static_cast<size_t>(mode.x);
      if (len < 2 * x) {
        out.tokens = t;  // short document: take it whole, never repeat tokens
      } else {
        out.tokens.reserve(2 * x);
        out.tokens.insert(out.tokens.end(), t.begin(), t.begin() + x);
        out.tokens.insert(out.tokens.end(), t.end() - x, t.end());
      }
      break;
    }
  }
  return out;
}

TokenStream preprocess(const TokenStream& stream,
                       const std::unordered_set<std::string>& stopwords) {
  TokenStream out;
  out.source_id = stream.source_id;
  out.tokens.reserve(stream.tokens.size());
  for (const std::string& tok : stream.tokens) {
    if (stopwords.contains(tok)) continue;
    const bool has_alnum = std::any_of(tok.begin(), tok.end(), [](char c) {
      return is_ascii_alnum(static_cast<uint8_t>(c)) ||
             static_cast<uint8_t>(c) >= 0x80;
    });
    if (!has_alnum) continue;
    out.tokens.push_back(porter_stem(tok));
  }
  return out;
}

std::unordered_set<std::string> load_stopwords(
    const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open stopword file: " + file.string());
  }
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    TokenStream toks = tokenize(line);
    for (auto& t : toks.tokens) words.insert(std::move(t));
  }
  return words;
}

}  // namespace scopegate
