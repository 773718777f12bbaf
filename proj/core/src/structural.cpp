#include "scopegate/structural.hpp"

#include <algorithm>
#include <cctype>

#include "scopegate/textproc.hpp"
#include "scopegate/unicode.hpp"

namespace scopegate {

const std::array<std::string, kStructuralFeatureCount>& structural_feature_names() {
  static const std::array<std::string, kStructuralFeatureCount> names = {
      "pgCount",
      "fileSize",
      "strLength",
      "numTok",
      "numLines",
      "avgNumWordsPerPage",
      "avgNumLinesPerPage",
      "avgNumWordsPerLine",
      "refCount",
      "refRatio",
      "spcRatio",
      "ucaseRatio",
      "symbolRatio",
      "lnratio",
      "ucaseStart",
      "symbolStart",
      "tokBeforeRef",
      "abstract",
      "intro",
      "concl",
      "ack",
      "references",
      "chapter",
      "positionOfAbstract",
      "positionOfIntro",
      "positionOfConcl",
      "positionOfAck",
      "positionOfReferences",
      "positionOfChapter",
      "AckBeforeIntro",
      "AckAfterIntro",
      "thisPaper",
      "thisBook",
      "thisThesis",
      "thisChapter",
      "thisDocument",
      "thisSection",
      "researchInterests",
      "researchExperience",
      "education",
      "publications",
      "positionOfThisPaper",
      "positionOfThisBook",
      "positionOfThisThesis",
  };
  return names;
}

SparseVector StructuralFeatures::to_sparse() const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(values.size());
  for (uint32_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) entries.emplace_back(i, values[i]);
  }
  return SparseVector::from_entries(std::move(entries));
}

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' ||
         c == '\r';
}

int count_bracket_citations(std::string_view text) {
  // \[\s*\d+(\s*,\s*\d+)*\s*\]
  int count = 0;
  size_t i = 0;
  const size_t n = text.size();
  const auto skip_ws = [&](size_t j) {
    while (j < n && is_ascii_space(text[j])) ++j;
    return j;
  };
  const auto skip_digits = [&](size_t j) {
    while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  while (i < n) {
    if (text[i] != '[') {
      ++i;
      continue;
    }
    size_t j = skip_ws(i + 1);
    size_t d = skip_digits(j);
    if (d == j) {
      ++i;
      continue;
    }
    j = d;
    bool ok = true;
    for (;;) {
      j = skip_ws(j);
      if (j < n && text[j] == ']') {
        ++j;
        break;
      }
      if (j < n && text[j] == ',') {
        j = skip_ws(j + 1);
        d = skip_digits(j);
        if (d == j) {
          ok = false;
          break;
        }
        j = d;
        continue;
      }
      ok = false;
      break;
    }
    if (ok) {
      ++count;
      i = j;
    } else {
      ++i;
    }
  }
  return count;
}

int count_year_citations(std::string_view text) {
  // \([^()]*\d{4}[^()]*\): a parenthesized group, no nesting, containing at
  // least four consecutive digits.
  int count = 0;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (text[i] != '(') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    int run = 0;
    bool has_year = false;
    while (j < n && text[j] != '(' && text[j] != ')') {
      if (std::isdigit(static_cast<unsigned char>(text[j]))) {
        if (++run >= 4) has_year = true;
      } else {
        run = 0;
      }
      ++j;
    }
    if (j < n && text[j] == ')') {
      if (has_year) ++count;
      i = j + 1;
    } else {
      // nested '(' restarts the scan there; end of text stops it
      i = j < n ? j : n;
    }
  }
  return count;
}

struct SectionHit {
  bool present = false;
  size_t token_offset = 0;
};

// A heading fires when the trimmed line starts with the keyword
// (case-insensitive) and the line holds at most five tokens.
bool line_starts_with(const std::string& lower_line, std::string_view keyword) {
  return lower_line.size() >= keyword.size() &&
         lower_line.compare(0, keyword.size(), keyword) == 0;
}

}  // namespace

int count_reference_mentions(std::string_view text) {
  return count_bracket_citations(text) + count_year_citations(text);
}

StructuralFeatures extract_structural(const Document& doc) {
  StructuralFeatures f;
  f[StructuralSlot::PgCount] = doc.page_count;
  f[StructuralSlot::FileSize] = doc.file_size_kb;

  std::string text = doc.joined_text();
  while (!text.empty() && is_ascii_space(text.back())) text.pop_back();

  // Character statistics over the whole text.
  size_t total_cp = 0, upper_cp = 0, space_cp = 0, symbol_cp = 0;
  {
    size_t i = 0;
    while (i < text.size()) {
      uint32_t cp = decode_utf8(text, i);
      ++total_cp;
      if (is_space_cp(cp)) {
        ++space_cp;
      } else if (is_ascii_upper(cp)) {
        ++upper_cp;
      } else if (!is_word_cp(cp)) {
        ++symbol_cp;
      }
    }
  }

  // Lines: newline or page boundary.
  std::vector<std::string_view> lines;
  {
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n' || text[i] == '\f') {
        lines.push_back(std::string_view(text).substr(start, i - start));
        start = i + 1;
      }
    }
    if (text.empty()) lines.clear();
  }

  SectionHit abstract, intro, concl, ack, references, chapter;
  SectionHit this_paper, this_book, this_thesis;
  bool this_chapter = false, this_document = false, this_section = false;
  bool research_interests = false, research_experience = false;
  bool education = false, publications = false;

  std::vector<std::string> all_tokens;
  size_t token_offset = 0;
  size_t ucase_start = 0, symbol_start = 0;
  size_t min_line_len = 0, max_line_len = 0;
  bool have_line_len = false;

  for (std::string_view line : lines) {
    TokenStream toks = tokenize(line);
    const size_t line_tokens = toks.tokens.size();

    // Leading character class.
    {
      size_t i = 0;
      while (i < line.size()) {
        uint32_t cp = decode_utf8(line, i);
        if (is_space_cp(cp)) continue;
        if (is_ascii_upper(cp)) {
          ++ucase_start;
        } else if (!is_word_cp(cp)) {
          ++symbol_start;
        }
        break;
      }
    }

    // Shortest/longest line in codepoints, over non-empty lines.
    {
      size_t len = 0;
      for (size_t i = 0; i < line.size();) {
        decode_utf8(line, i);
        ++len;
      }
      if (len > 0) {
        if (!have_line_len) {
          min_line_len = max_line_len = len;
          have_line_len = true;
        } else {
          min_line_len = std::min(min_line_len, len);
          max_line_len = std::max(max_line_len, len);
        }
      }
    }

    // Section headings.
    if (line_tokens >= 1 && line_tokens <= 5) {
      std::string lower;
      lower.reserve(line.size());
      size_t b = 0, e = line.size();
      while (b < e && is_ascii_space(line[b])) ++b;
      while (e > b && is_ascii_space(line[e - 1])) --e;
      for (size_t i = b; i < e; ++i) {
        lower += static_cast<char>(
            ascii_lower(static_cast<unsigned char>(line[i])));
      }
      const auto hit = [&](SectionHit& slot) {
        if (!slot.present) {
          slot.present = true;
          slot.token_offset = token_offset;
        }
      };
      if (line_starts_with(lower, "abstract")) hit(abstract);
      if (line_starts_with(lower, "introduction")) hit(intro);
      if (line_starts_with(lower, "conclusion")) hit(concl);
      if (line_starts_with(lower, "acknowledgment") ||
          line_starts_with(lower, "acknowledgement")) {
        hit(ack);
      }
      if (line_starts_with(lower, "references") ||
          line_starts_with(lower, "bibliography")) {
        hit(references);
      }
      if (line_starts_with(lower, "chapter")) hit(chapter);
    }

    for (auto& t : toks.tokens) all_tokens.push_back(std::move(t));
    token_offset += line_tokens;
  }

  const size_t num_tok = all_tokens.size();

  // Containment phrases over the token sequence.
  for (size_t i = 0; i < num_tok; ++i) {
    const std::string& t = all_tokens[i];
    if (t == "education") education = true;
    if (t == "publications") publications = true;
    if (i + 1 < num_tok) {
      const std::string& u = all_tokens[i + 1];
      if (t == "this") {
        const auto hit = [&](SectionHit& slot) {
          if (!slot.present) {
            slot.present = true;
            slot.token_offset = i;
          }
        };
        if (u == "paper") hit(this_paper);
        if (u == "book") hit(this_book);
        if (u == "thesis") hit(this_thesis);
        if (u == "chapter") this_chapter = true;
        if (u == "document") this_document = true;
        if (u == "section") this_section = true;
      } else if (t == "research") {
        if (u == "interests") research_interests = true;
        if (u == "experience") research_experience = true;
      }
    }
  }

  const double num_tok_d = static_cast<double>(num_tok);
  const size_t num_lines = lines.size();

  f[StructuralSlot::StrLength] = static_cast<double>(total_cp);
  f[StructuralSlot::NumTok] = num_tok_d;
  f[StructuralSlot::NumLines] = static_cast<double>(num_lines);
  f[StructuralSlot::AvgNumWordsPerPage] =
      doc.page_count > 0 ? num_tok_d / doc.page_count : 0.0;
  f[StructuralSlot::AvgNumLinesPerPage] =
      doc.page_count > 0 ? static_cast<double>(num_lines) / doc.page_count : 0.0;
  f[StructuralSlot::AvgNumWordsPerLine] =
      num_lines > 0 ? num_tok_d / static_cast<double>(num_lines) : 0.0;

  const int ref_count = count_reference_mentions(text);
  f[StructuralSlot::RefCount] = ref_count;
  f[StructuralSlot::RefRatio] =
      num_tok > 0 ? std::min(1.0, ref_count / num_tok_d) : 0.0;

  const double total_cp_d = static_cast<double>(total_cp);
  f[StructuralSlot::SpcRatio] = total_cp > 0 ? space_cp / total_cp_d : 0.0;
  f[StructuralSlot::UcaseRatio] = total_cp > 0 ? upper_cp / total_cp_d : 0.0;
  f[StructuralSlot::SymbolRatio] = total_cp > 0 ? symbol_cp / total_cp_d : 0.0;
  f[StructuralSlot::Lnratio] =
      have_line_len && max_line_len > 0
          ? static_cast<double>(min_line_len) / static_cast<double>(max_line_len)
          : 0.0;
  f[StructuralSlot::UcaseStart] = static_cast<double>(ucase_start);
  f[StructuralSlot::SymbolStart] = static_cast<double>(symbol_start);

  const auto position = [&](const SectionHit& hit) {
    return hit.present && num_tok > 0
               ? static_cast<double>(hit.token_offset) / num_tok_d
               : -1.0;
  };

  f[StructuralSlot::TokBeforeRef] =
      references.present ? static_cast<double>(references.token_offset) : num_tok_d;

  f[StructuralSlot::Abstract] = abstract.present ? 1.0 : 0.0;
  f[StructuralSlot::Intro] = intro.present ? 1.0 : 0.0;
  f[StructuralSlot::Concl] = concl.present ? 1.0 : 0.0;
  f[StructuralSlot::Ack] = ack.present ? 1.0 : 0.0;
  f[StructuralSlot::References] = references.present ? 1.0 : 0.0;
  f[StructuralSlot::Chapter] = chapter.present ? 1.0 : 0.0;
  f[StructuralSlot::PositionOfAbstract] = position(abstract);
  f[StructuralSlot::PositionOfIntro] = position(intro);
  f[StructuralSlot::PositionOfConcl] = position(concl);
  f[StructuralSlot::PositionOfAck] = position(ack);
  f[StructuralSlot::PositionOfReferences] = position(references);
  f[StructuralSlot::PositionOfChapter] = position(chapter);
  f[StructuralSlot::AckBeforeIntro] =
      ack.present && intro.present && ack.token_offset < intro.token_offset
          ? 1.0
          : 0.0;
  f[StructuralSlot::AckAfterIntro] =
      ack.present && intro.present && ack.token_offset > intro.token_offset
          ? 1.0
          : 0.0;

  f[StructuralSlot::ThisPaper] = this_paper.present ? 1.0 : 0.0;
  f[StructuralSlot::ThisBook] = this_book.present ? 1.0 : 0.0;
  f[StructuralSlot::ThisThesis] = this_thesis.present ? 1.0 : 0.0;
  f[StructuralSlot::ThisChapter] = this_chapter ? 1.0 : 0.0;
  f[StructuralSlot::ThisDocument] = this_document ? 1.0 : 0.0;
  f[StructuralSlot::ThisSection] = this_section ? 1.0 : 0.0;
  f[StructuralSlot::ResearchInterests] = research_interests ? 1.0 : 0.0;
  f[StructuralSlot::ResearchExperience] = research_experience ? 1.0 : 0.0;
  f[StructuralSlot::Education] = education ? 1.0 : 0.0;
  f[StructuralSlot::Publications] = publications ? 1.0 : 0.0;
  f[StructuralSlot::PositionOfThisPaper] = position(this_paper);
  f[StructuralSlot::PositionOfThisBook] = position(this_book);
  f[StructuralSlot::PositionOfThisThesis] = position(this_thesis);

  return f;
}

}  // namespace scopegate
