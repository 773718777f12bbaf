#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scopegate/sparse.hpp"
#include "scopegate/textproc.hpp"

namespace scopegate {

struct EmptyVocabularyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Term -> dense column index table with per-term document frequencies.
// Built from training documents only; terms below min_df are pruned and
// indices are assigned in lexicographic term order, so two builds over the
// same corpus are identical.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary build(const std::vector<TokenStream>& train_docs,
                          uint32_t min_df);

  std::optional<uint32_t> index_of(std::string_view term) const;
  const std::string& term(uint32_t index) const { return terms_[index]; }
  uint32_t doc_freq(uint32_t index) const { return doc_freq_[index]; }
  size_t size() const { return terms_.size(); }
  uint32_t min_df() const { return min_df_; }
  uint64_t num_docs() const { return num_docs_; }
  const std::vector<std::string>& terms() const { return terms_; }

  // Smoothed inverse document frequency: ln((1+D)/(1+df)) + 1.
  double idf(uint32_t index) const;

  // Text export: `term<TAB>index<TAB>df` per line, preceded by one comment
  // line carrying the document count and min_df needed to rebuild idf.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

  bool operator==(const Vocabulary& other) const {
    return terms_ == other.terms_ && doc_freq_ == other.doc_freq_ &&
           min_df_ == other.min_df_ && num_docs_ == other.num_docs_;
  }

 private:
  std::vector<std::string> terms_;    // index -> term, lexicographic
  std::vector<uint32_t> doc_freq_;    // aligned with terms_
  std::unordered_map<std::string, uint32_t> index_;
  uint32_t min_df_ = 1;
  uint64_t num_docs_ = 0;

  void rebuild_index();
  friend struct VocabularyAccess;
};

enum class WeightingScheme { Tf, TfIdf };

std::string_view weighting_name(WeightingScheme w);
WeightingScheme parse_weighting(std::string_view text);

// Bag-of-words vector for one document. Out-of-vocabulary tokens are ignored.
// Tf: term count / total in-vocabulary count (L1 norm 1 for non-empty docs).
// TfIdf: count * idf, then L2-normalized.
SparseVector vectorize(const TokenStream& doc, const Vocabulary& vocab,
                       WeightingScheme scheme);

}  // namespace scopegate
