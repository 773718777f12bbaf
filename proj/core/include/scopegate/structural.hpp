#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "scopegate/corpus.hpp"
#include "scopegate/sparse.hpp"

namespace scopegate {

// Layout-oriented document features in four families: file (page count,
// size), text (token/line/character statistics), section (heading markers
// and their positions), and containment (tell-tale phrases). The slot order
// below is the canonical one used everywhere a structural vector appears.
enum class StructuralSlot : uint32_t {
  PgCount = 0,
  FileSize,
  StrLength,
  NumTok,
  NumLines,
  AvgNumWordsPerPage,
  AvgNumLinesPerPage,
  AvgNumWordsPerLine,
  RefCount,
  RefRatio,
  SpcRatio,
  UcaseRatio,
  SymbolRatio,
  Lnratio,
  UcaseStart,
  SymbolStart,
  TokBeforeRef,
  Abstract,
  Intro,
  Concl,
  Ack,
  References,
  Chapter,
  PositionOfAbstract,
  PositionOfIntro,
  PositionOfConcl,
  PositionOfAck,
  PositionOfReferences,
  PositionOfChapter,
  AckBeforeIntro,
  AckAfterIntro,
  ThisPaper,
  ThisBook,
  ThisThesis,
  ThisChapter,
  ThisDocument,
  ThisSection,
  ResearchInterests,
  ResearchExperience,
  Education,
  Publications,
  PositionOfThisPaper,
  PositionOfThisBook,
  PositionOfThisThesis,
};

inline constexpr size_t kStructuralFeatureCount = 44;

// Slot names as they appear in ranking exports.
const std::array<std::string, kStructuralFeatureCount>& structural_feature_names();

struct StructuralFeatures {
  // Ratio slots lie in [0, 1]; position slots are fractional token offsets in
  // [0, 1] or -1 when the marker is absent; boolean slots are 0/1.
  std::array<double, kStructuralFeatureCount> values{};

  double operator[](StructuralSlot s) const {
    return values[static_cast<size_t>(s)];
  }
  double& operator[](StructuralSlot s) {
    return values[static_cast<size_t>(s)];
  }

  SparseVector to_sparse() const;
};

// Pure function of (pages, page_count, file_size_kb). Degenerate documents
// (empty text, single line) produce zero/sentinel values, never errors.
StructuralFeatures extract_structural(const Document& doc);

// Bracketed citation groups ([7], [3,4], [1, 2, 3]) plus parenthesized
// groups containing a four-digit run ("(Smith, 2008)").
int count_reference_mentions(std::string_view text);

}  // namespace scopegate
