#include "scopegate/vocabulary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

namespace scopegate {

Vocabulary Vocabulary::build(const std::vector<TokenStream>& train_docs,
                             uint32_t min_df) {
  if (min_df < 1) min_df = 1;
  // std::map keeps terms sorted, which fixes the index assignment.
  std::map<std::string, uint32_t> df;
  std::unordered_set<std::string> seen;
  for (const TokenStream& doc : train_docs) {
    seen.clear();
    for (const std::string& tok : doc.tokens) {
      if (seen.insert(tok).second) df[tok] += 1;
    }
  }

  Vocabulary v;
  v.min_df_ = min_df;
  v.num_docs_ = train_docs.size();
  for (const auto& [term, count] : df) {
    if (count >= min_df) {
      v.terms_.push_back(term);
      v.doc_freq_.push_back(count);
    }
  }
  if (v.terms_.empty()) {
    throw EmptyVocabularyError("no term reached document frequency " +
                               std::to_string(min_df));
  }
  v.rebuild_index();
  return v;
}

void Vocabulary::rebuild_index() {
  index_.clear();
  index_.reserve(terms_.size());
  for (uint32_t i = 0; i < terms_.size(); ++i) index_[terms_[i]] = i;
}

std::optional<uint32_t> Vocabulary::index_of(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Vocabulary::idf(uint32_t index) const {
  return std::log((1.0 + static_cast<double>(num_docs_)) /
                  (1.0 + static_cast<double>(doc_freq_[index]))) +
         1.0;
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write vocabulary: " + path.string());
  out << "# docs=" << num_docs_ << " min_df=" << min_df_ << '\n';
  for (uint32_t i = 0; i < terms_.size(); ++i) {
    out << terms_[i] << '\t' << i << '\t' << doc_freq_[i] << '\n';
  }
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open vocabulary: " + path.string());
  Vocabulary v;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.starts_with("#")) {
      first = false;
      if (auto at = line.find("docs="); at != std::string::npos) {
        v.num_docs_ = std::strtoull(line.c_str() + at + 5, nullptr, 10);
      }
      if (auto at = line.find("min_df="); at != std::string::npos) {
        v.min_df_ = static_cast<uint32_t>(
            std::strtoul(line.c_str() + at + 7, nullptr, 10));
      }
      continue;
    }
    first = false;
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos
                                          : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error("bad vocabulary line: " + line);
    }
    std::string term = line.substr(0, tab1);
    uint32_t index =
        static_cast<uint32_t>(std::strtoul(line.c_str() + tab1 + 1, nullptr, 10));
    uint32_t df =
        static_cast<uint32_t>(std::strtoul(line.c_str() + tab2 + 1, nullptr, 10));
    if (index != v.terms_.size()) {
      throw std::runtime_error("vocabulary indices out of order at: " + line);
    }
    v.terms_.push_back(std::move(term));
    v.doc_freq_.push_back(df);
  }
  v.rebuild_index();
  return v;
}

std::string_view weighting_name(WeightingScheme w) {
  return w == WeightingScheme::Tf ? "tf" : "tfidf";
}

WeightingScheme parse_weighting(std::string_view text) {
  if (text == "tf") return WeightingScheme::Tf;
  if (text == "tfidf" || text == "tf-idf") return WeightingScheme::TfIdf;
  throw std::invalid_argument("bad weighting scheme: " + std::string(text));
}

SparseVector vectorize(const TokenStream& doc, const Vocabulary& vocab,
                       WeightingScheme scheme) {
  std::unordered_map<uint32_t, double> counts;
  double total = 0.0;
  for (const std::string& tok : doc.tokens) {
    if (auto idx = vocab.index_of(tok)) {
      counts[*idx] += 1.0;
      total += 1.0;
    }
  }
  if (counts.empty()) return {};

  std::vector<SparseVector::Entry> entries;
  entries.reserve(counts.size());
  if (scheme == WeightingScheme::Tf) {
    for (const auto& [idx, c] : counts) entries.emplace_back(idx, c / total);
    return SparseVector::from_entries(std::move(entries));
  }
  for (const auto& [idx, c] : counts) {
    entries.emplace_back(idx, c * vocab.idf(idx));
  }
  SparseVector v = SparseVector::from_entries(std::move(entries));
  const double norm = v.l2_norm();
  if (norm > 0.0) v.scale(1.0 / norm);
  return v;
}

}  // namespace scopegate
