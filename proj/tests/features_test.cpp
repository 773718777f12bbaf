#include <doctest.h>

#include <regex>

#include "scopegate/feature_space.hpp"
#include "scopegate/structural.hpp"
#include "scopegate/vocabulary.hpp"
#include "testutil.hpp"

using namespace scopegate;
using namespace scopegate::test;

namespace {

TokenStream stream_of(std::vector<std::string> tokens) {
  TokenStream s;
  s.tokens = std::move(tokens);
  return s;
}

// Regex reference for the citation patterns, independent of the scanner.
int regex_reference_count(const std::string& text) {
  static const std::regex bracket(R"(\[\s*[0-9]+(\s*,\s*[0-9]+)*\s*\])");
  static const std::regex year(R"(\([^()]*[0-9]{4}[^()]*\))");
  int count = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), bracket);
       it != std::sregex_iterator(); ++it) {
    ++count;
  }
  for (auto it = std::sregex_iterator(text.begin(), text.end(), year);
       it != std::sregex_iterator(); ++it) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("vocabulary keeps terms at or above min_df") {
  std::vector<TokenStream> docs;
  for (int i = 0; i < 6; ++i) docs.push_back(stream_of({"report", "filler" + std::to_string(i)}));
  Vocabulary v = Vocabulary::build(docs, 5);
  REQUIRE(v.size() == 1);
  CHECK(v.index_of("report").has_value());
  CHECK(v.doc_freq(*v.index_of("report")) == 6);
  CHECK(!v.index_of("filler0").has_value());
}

TEST_CASE("vocabulary excludes a term below the document-frequency floor") {
  std::vector<TokenStream> docs;
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::string> toks{"common"};
    if (i < 4) toks.push_back("rare");
    docs.push_back(stream_of(toks));
  }
  Vocabulary v = Vocabulary::build(docs, 5);
  CHECK(v.index_of("common").has_value());
  CHECK(!v.index_of("rare").has_value());
}

TEST_CASE("vocabulary build is deterministic with lexicographic indices") {
  std::vector<TokenStream> docs;
  for (int i = 0; i < 5; ++i) docs.push_back(stream_of({"zebra", "apple", "mango"}));
  Vocabulary a = Vocabulary::build(docs, 5);
  Vocabulary b = Vocabulary::build(docs, 5);
  CHECK(a == b);
  CHECK(*a.index_of("apple") == 0);
  CHECK(*a.index_of("mango") == 1);
  CHECK(*a.index_of("zebra") == 2);
}

TEST_CASE("vocabulary with nothing above threshold is an error") {
  std::vector<TokenStream> docs{stream_of({"once"}), stream_of({"twice"})};
  CHECK_THROWS_AS(Vocabulary::build(docs, 5), EmptyVocabularyError);
}

TEST_CASE("vocabulary round-trips through its text file") {
  TempDir dir("vocab");
  std::vector<TokenStream> docs;
  for (int i = 0; i < 7; ++i) docs.push_back(stream_of({"alpha", "beta"}));
  Vocabulary v = Vocabulary::build(docs, 5);
  v.save(dir.path() / "vocab.tsv");
  Vocabulary r = Vocabulary::load(dir.path() / "vocab.tsv");
  CHECK(v == r);
  CHECK(r.num_docs() == 7);
  CHECK(r.idf(0) == doctest::Approx(v.idf(0)));
}

TEST_CASE("tf weighting normalizes counts over in-vocabulary tokens") {
  std::vector<TokenStream> docs;
  for (int i = 0; i < 5; ++i) docs.push_back(stream_of({"a", "b"}));
  Vocabulary v = Vocabulary::build(docs, 1);
  SparseVector x = vectorize(stream_of({"a", "a", "b"}), v, WeightingScheme::Tf);
  CHECK(x.at(*v.index_of("a")) == doctest::Approx(2.0 / 3.0));
  CHECK(x.at(*v.index_of("b")) == doctest::Approx(1.0 / 3.0));
  CHECK(x.l1_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vectorize ignores out-of-vocabulary tokens") {
  std::vector<TokenStream> docs{stream_of({"a"}), stream_of({"a"})};
  Vocabulary v = Vocabulary::build(docs, 1);
  CHECK(vectorize(stream_of({"zzz", "qqq"}), v, WeightingScheme::Tf).empty());
  CHECK(vectorize(stream_of({}), v, WeightingScheme::TfIdf).empty());
}

TEST_CASE("tfidf component ratio follows the smoothed idf formula") {
  // 3 docs, df(a)=3, df(b)=1: w_b/w_a = (ln(4/2)+1)/(ln(4/4)+1)
  std::vector<TokenStream> docs{stream_of({"a", "b"}), stream_of({"a"}),
                                stream_of({"a"})};
  Vocabulary v = Vocabulary::build(docs, 1);
  SparseVector x = vectorize(stream_of({"a", "b"}), v, WeightingScheme::TfIdf);
  const double wa = x.at(*v.index_of("a"));
  const double wb = x.at(*v.index_of("b"));
  const double expected = (std::log(4.0 / 2.0) + 1.0) / (std::log(4.0 / 4.0) + 1.0);
  CHECK(wb / wa == doctest::Approx(expected).epsilon(1e-12));
  CHECK(x.l2_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm invariants over random token streams") {
  SplitMix64 rng(5);
  std::vector<TokenStream> docs;
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> toks;
    const size_t len = 1 + rng.next_below(60);
    for (size_t t = 0; t < len; ++t) {
      toks.push_back("w" + std::to_string(rng.next_below(30)));
    }
    docs.push_back(stream_of(std::move(toks)));
  }
  Vocabulary v = Vocabulary::build(docs, 1);
  for (const auto& doc : docs) {
    CHECK(vectorize(doc, v, WeightingScheme::Tf).l1_norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vectorize(doc, v, WeightingScheme::TfIdf).l2_norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("reference mention counting matches the regex reference") {
  CHECK(count_reference_mentions("as shown in [3] and [4,5]") == 2);
  CHECK(count_reference_mentions("") == 0);
  CHECK(count_reference_mentions("see (Smith, 2008)") == 1);
  CHECK(count_reference_mentions("[12, 13 , 14] then (Jones et al., 1999)") == 2);
  CHECK(count_reference_mentions("[a] (b) [1x] (p. 12)") == 0);
  CHECK(count_reference_mentions("( nested (Lee, 2001) outer") == 1);
  CHECK(count_reference_mentions("[3] inside (see [4] 1999)") == 3);

  const std::vector<std::string> samples = {
      "as shown in [3] and [4,5]",
      "see (Smith, 2008)",
      "( nested (Lee, 2001) outer",
      "[3] inside (see [4] 1999)",
      "totally plain text with numbers 1234 but no parens",
      "[1] [2] [3,4,5] (2020) (20) (x2020y)",
      "unclosed ( paren 2019",
      "[ 7 ] and [8 ,9]",
  };
  for (const auto& s : samples) {
    CAPTURE(s);
    CHECK(count_reference_mentions(s) == regex_reference_count(s));
  }
}

TEST_CASE("structural extraction of a degenerate document") {
  Document d = make_doc("empty", Label::OutOfScope, "", 1, 3.0);
  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::PgCount] == 1.0);
  CHECK(f[StructuralSlot::FileSize] == 3.0);
  CHECK(f[StructuralSlot::StrLength] == 0.0);
  CHECK(f[StructuralSlot::NumTok] == 0.0);
  CHECK(f[StructuralSlot::NumLines] == 0.0);
  CHECK(f[StructuralSlot::RefCount] == 0.0);
  CHECK(f[StructuralSlot::RefRatio] == 0.0);
  CHECK(f[StructuralSlot::SpcRatio] == 0.0);
  CHECK(f[StructuralSlot::TokBeforeRef] == 0.0);
  for (auto slot : {StructuralSlot::Abstract, StructuralSlot::Intro,
                    StructuralSlot::Concl, StructuralSlot::Ack,
                    StructuralSlot::References, StructuralSlot::Chapter,
                    StructuralSlot::ThisPaper, StructuralSlot::Education}) {
    CHECK(f[slot] == 0.0);
  }
  for (auto slot :
       {StructuralSlot::PositionOfAbstract, StructuralSlot::PositionOfIntro,
        StructuralSlot::PositionOfConcl, StructuralSlot::PositionOfAck,
        StructuralSlot::PositionOfReferences, StructuralSlot::PositionOfChapter,
        StructuralSlot::PositionOfThisPaper, StructuralSlot::PositionOfThisBook,
        StructuralSlot::PositionOfThisThesis}) {
    CHECK(f[slot] == -1.0);
  }
}

TEST_CASE("structural extraction finds a planted references heading") {
  // 50 filler tokens, then a references heading line, then 49 more tokens:
  // the heading's first token sits at offset 50 of 100.
  std::string text;
  for (int i = 0; i < 50; ++i) text += "tok" + std::to_string(i) + " ";
  text += "\nReferences\n";
  for (int i = 0; i < 49; ++i) text += "ref" + std::to_string(i) + " ";
  Document d = make_doc("planted", Label::InScope, text, 1, 1.0);

  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::NumTok] == 100.0);
  CHECK(f[StructuralSlot::References] == 1.0);
  CHECK(f[StructuralSlot::PositionOfReferences] == doctest::Approx(0.5));
  CHECK(f[StructuralSlot::TokBeforeRef] == 50.0);
}

TEST_CASE("structural extraction finds a planted containment phrase") {
  std::string text;
  for (int i = 0; i < 10; ++i) text += "pre" + std::to_string(i) + " ";
  text += "this paper ";
  for (int i = 0; i < 88; ++i) text += "post" + std::to_string(i) + " ";
  Document d = make_doc("phrase", Label::InScope, text, 1, 1.0);

  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::NumTok] == 100.0);
  CHECK(f[StructuralSlot::ThisPaper] == 1.0);
  CHECK(f[StructuralSlot::PositionOfThisPaper] == doctest::Approx(0.1));
  CHECK(f[StructuralSlot::ThisBook] == 0.0);
}

TEST_CASE("structural section rules: heading length and ack ordering") {
  const std::string text =
      "Acknowledgements\n"
      "thanks to everyone\n"
      "Introduction\n"
      "introduction of the method goes on with many words in one line here\n"
      "Conclusions\n"
      "done\n";
  Document d = make_doc("sections", Label::InScope, text, 1, 1.0);
  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::Ack] == 1.0);
  CHECK(f[StructuralSlot::Intro] == 1.0);
  CHECK(f[StructuralSlot::Concl] == 1.0);  // "conclusions" prefix rule
  CHECK(f[StructuralSlot::AckBeforeIntro] == 1.0);
  CHECK(f[StructuralSlot::AckAfterIntro] == 0.0);
  // the long prose line beginning with "introduction" must not refire or
  // shift positions: first hit wins
  CHECK(f[StructuralSlot::PositionOfIntro] ==
        doctest::Approx(4.0 / f[StructuralSlot::NumTok]));
}

TEST_CASE("structural heading with more than five tokens does not fire") {
  const std::string text =
      "abstract thoughts about seven different long things here\nbody\n";
  Document d = make_doc("noheading", Label::InScope, text, 1, 1.0);
  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::Abstract] == 0.0);
  CHECK(f[StructuralSlot::PositionOfAbstract] == -1.0);
}

TEST_CASE("structural ratios and line statistics") {
  const std::string text = "AB cd\n(x)\n\nlong line of text";
  Document d = make_doc("ratios", Label::InScope, text, 2, 4.0);
  StructuralFeatures f = extract_structural(d);
  CHECK(f[StructuralSlot::NumLines] == 4.0);
  CHECK(f[StructuralSlot::UcaseStart] == 1.0);   // "AB cd"
  CHECK(f[StructuralSlot::SymbolStart] == 1.0);  // "(x)"
  CHECK(f[StructuralSlot::Lnratio] == doctest::Approx(3.0 / 17.0));
  CHECK(f[StructuralSlot::AvgNumWordsPerPage] ==
        doctest::Approx(f[StructuralSlot::NumTok] / 2.0));
  // every ratio slot stays in [0, 1]
  for (auto slot : {StructuralSlot::RefRatio, StructuralSlot::SpcRatio,
                    StructuralSlot::UcaseRatio, StructuralSlot::SymbolRatio,
                    StructuralSlot::Lnratio}) {
    CHECK(f[slot] >= 0.0);
    CHECK(f[slot] <= 1.0);
  }
}

TEST_CASE("structural extraction ignores trailing whitespace") {
  const std::string base = "Abstract\nsome body text here\nReferences\n[1]";
  Document a = make_doc("a", Label::InScope, base, 1, 1.0);
  Document b = make_doc("b", Label::InScope, base + "\n\n   \n", 1, 1.0);
  CHECK(extract_structural(a).values == extract_structural(b).values);
}

TEST_CASE("structural output arity is fixed") {
  CHECK(structural_feature_names().size() == kStructuralFeatureCount);
  Document d1 = make_doc("x", Label::InScope, "word", 1, 1.0);
  Document d2 = make_doc("y", Label::InScope, "", 1, 1.0);
  CHECK(extract_structural(d1).values.size() == kStructuralFeatureCount);
  CHECK(extract_structural(d2).values.size() == kStructuralFeatureCount);
}

TEST_CASE("feature space reduces columns after vectorization") {
  std::vector<TokenStream> docs;
  for (int i = 0; i < 5; ++i) docs.push_back(stream_of({"aa", "bb", "cc"}));
  Vocabulary v = Vocabulary::build(docs, 1);
  FeatureSpace space = FeatureSpace::bag_of_words(
      v, PortionMode::all(), WeightingScheme::Tf, {"the"});
  space.select_features({"cc", "aa"});
  CHECK(space.dimension() == 2);
  CHECK(space.feature_names() == std::vector<std::string>{"aa", "cc"});

  Document d = make_doc("d", Label::InScope, "aa bb cc cc", 1, 1.0);
  SparseVector x = space.transform(d);
  // tf normalization happened over the full vocabulary (4 in-vocab tokens)
  CHECK(x.at(0) == doctest::Approx(0.25));  // aa
  CHECK(x.at(1) == doctest::Approx(0.5));   // cc
  CHECK(x.nnz() == 2);
}

TEST_CASE("structural feature space transform matches direct extraction") {
  Document d = make_doc("s", Label::InScope, "Abstract\nthis paper", 1, 2.0);
  FeatureSpace space = FeatureSpace::structural();
  SparseVector x = space.transform(d);
  StructuralFeatures f = extract_structural(d);
  for (uint32_t i = 0; i < kStructuralFeatureCount; ++i) {
    CHECK(x.at(i) == f.values[i]);
  }
}
