#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "scopegate/corpus.hpp"
#include "scopegate/sparse.hpp"
#include "scopegate/structural.hpp"
#include "scopegate/textproc.hpp"
#include "scopegate/vocabulary.hpp"

namespace scopegate {

// Everything needed to turn a raw Document into a model input vector:
// feature family, portion rule, weighting, vocabulary, stopwords, and the
// optional top-N column subset chosen by feature selection. Serialized with
// the model, so a loaded model is self-contained.
struct FeatureSpace {
  enum class Type { BoW, Structural };

  Type type = Type::BoW;
  PortionMode portion = PortionMode::all();
  WeightingScheme weighting = WeightingScheme::TfIdf;
  Vocabulary vocab;                    // BoW only
  std::vector<std::string> stopwords;  // BoW only, as loaded

  // Original column indices kept after feature selection, ascending.
  // Empty means all columns. Selection happens after vectorization, so tf
  // normalization is always over the full vocabulary.
  std::vector<uint32_t> selected;

  static FeatureSpace bag_of_words(Vocabulary vocab, PortionMode portion,
                                   WeightingScheme weighting,
                                   std::vector<std::string> stopwords);
  static FeatureSpace structural();

  size_t dimension() const;
  std::vector<std::string> feature_names() const;

  SparseVector transform(const Document& doc) const;
  // BoW fast path when the caller already tokenized the raw text.
  SparseVector transform_tokens(const TokenStream& raw_tokens) const;

  // Restrict to the named features (vocabulary terms or structural slot
  // names); unknown names are ignored.
  void select_features(const std::vector<std::string>& names);

  // Map a full-space vector into the selected subspace (identity when no
  // selection is active).
  SparseVector reduce(const SparseVector& full) const;

  const std::unordered_set<std::string>& stopword_set() const;

 private:
  mutable std::unordered_set<std::string> stopword_set_;
  mutable bool stopword_set_built_ = false;
};

}  // namespace scopegate
