#pragma once

#include <cstdint>
#include <string_view>

namespace scopegate {

// Decodes the UTF-8 codepoint starting at s[i] and advances i past it.
// Malformed bytes are consumed one at a time and returned as their byte
// value, which keeps Latin-1 spillover from crashing the pipeline.
uint32_t decode_utf8(std::string_view s, size_t& i);

// Appends cp to out as UTF-8.
void append_utf8(std::string& out, uint32_t cp);

// ASCII whitespace plus NEL, NBSP, the U+2000 block, and the other common
// Unicode space separators.
bool is_space_cp(uint32_t cp);

// True for codepoints that count as word constituents: ASCII alphanumerics
// and any non-ASCII codepoint that is not a known punctuation mark. ASCII
// punctuation is never a word constituent.
bool is_word_cp(uint32_t cp);

inline bool is_ascii_alnum(uint32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
         (cp >= 'A' && cp <= 'Z');
}

inline bool is_ascii_upper(uint32_t cp) { return cp >= 'A' && cp <= 'Z'; }

inline uint32_t ascii_lower(uint32_t cp) {
  return is_ascii_upper(cp) ? cp + 32 : cp;
}

}  // namespace scopegate
