#include "scopegate/feature_space.hpp"

#include <algorithm>

namespace scopegate {

FeatureSpace FeatureSpace::bag_of_words(Vocabulary vocab, PortionMode portion,
                                        WeightingScheme weighting,
                                        std::vector<std::string> stopwords) {
  FeatureSpace s;
  s.type = Type::BoW;
  s.vocab = std::move(vocab);
  s.portion = portion;
  s.weighting = weighting;
  s.stopwords = std::move(stopwords);
  return s;
}

FeatureSpace FeatureSpace::structural() {
  FeatureSpace s;
  s.type = Type::Structural;
  return s;
}

size_t FeatureSpace::dimension() const {
  if (!selected.empty()) return selected.size();
  return type == Type::BoW ? vocab.size() : kStructuralFeatureCount;
}

std::vector<std::string> FeatureSpace::feature_names() const {
  const auto full_name = [&](uint32_t i) -> std::string {
    return type == Type::BoW ? vocab.term(i) : structural_feature_names()[i];
  };
  std::vector<std::string> names;
  if (!selected.empty()) {
    names.reserve(selected.size());
    for (uint32_t i : selected) names.push_back(full_name(i));
  } else {
    const size_t full =
        type == Type::BoW ? vocab.size() : kStructuralFeatureCount;
    names.reserve(full);
    for (uint32_t i = 0; i < full; ++i) names.push_back(full_name(i));
  }
  return names;
}

const std::unordered_set<std::string>& FeatureSpace::stopword_set() const {
  if (!stopword_set_built_) {
    stopword_set_ = {stopwords.begin(), stopwords.end()};
    stopword_set_built_ = true;
  }
  return stopword_set_;
}

SparseVector FeatureSpace::transform(const Document& doc) const {
  if (type == Type::Structural) {
    return reduce(extract_structural(doc).to_sparse());
  }
  return transform_tokens(tokenize(doc.joined_text(), doc.id));
}

SparseVector FeatureSpace::transform_tokens(const TokenStream& raw_tokens) const {
  TokenStream cut = take_portion(raw_tokens, portion);
  TokenStream clean = preprocess(cut, stopword_set());
  return reduce(vectorize(clean, vocab, weighting));
}

void FeatureSpace::select_features(const std::vector<std::string>& names) {
  std::vector<uint32_t> indices;
  indices.reserve(names.size());
  if (type == Type::BoW) {
    for (const std::string& n : names) {
      if (auto idx = vocab.index_of(n)) indices.push_back(*idx);
    }
  } else {
    const auto& slot_names = structural_feature_names();
    for (const std::string& n : names) {
      auto it = std::find(slot_names.begin(), slot_names.end(), n);
      if (it != slot_names.end()) {
        indices.push_back(static_cast<uint32_t>(it - slot_names.begin()));
      }
    }
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  selected = std::move(indices);
}

SparseVector FeatureSpace::reduce(const SparseVector& full) const {
  if (selected.empty()) return full;
  std::vector<SparseVector::Entry> entries;
  entries.reserve(full.nnz());
  for (const auto& [idx, w] : full.entries()) {
    auto it = std::lower_bound(selected.begin(), selected.end(), idx);
    if (it != selected.end() && *it == idx) {
      entries.emplace_back(static_cast<uint32_t>(it - selected.begin()), w);
    }
  }
  return SparseVector::from_entries(std::move(entries));
}

}  // namespace scopegate
