#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace scopegate {

enum class Label { OutOfScope = 0, InScope = 1, Unlabeled = 2 };

std::string_view label_name(Label label);
// Accepts "in_scope", "out_of_scope", "unlabeled", and the empty string
// (which maps to Unlabeled so prediction-only manifests can omit labels).
Label parse_label(std::string_view text);

struct Document {
  std::string id;
  Label label = Label::Unlabeled;
  std::vector<std::string> pages;  // split on the U+000C page delimiter
  int page_count = 0;              // manifest value; falls back to pages.size()
  double file_size_kb = 0.0;
  std::string text_file;  // manifest path, relative to the text directory

  // Pages rejoined with the form-feed delimiter.
  std::string joined_text() const;
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;

  size_t count_label(Label label) const;
  std::unordered_set<std::string> ids() const;
};

struct SplitRatios {
  double train = 0.6;
  double dev = 0.2;
  double test = 0.2;
};

struct Split {
  Corpus train;
  Corpus dev;
  Corpus test;
  uint64_t seed = 0;
};

struct TrainSet {
  // May contain repeated documents when the positive pool ran out and
  // oversampling kicked in; this is deliberately not a Corpus.
  std::vector<Document> documents;
  double neg_to_pos_ratio = 0.0;

  size_t count_label(Label label) const;
};

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingTextFileError : CorpusError {
  explicit MissingTextFileError(const std::string& id);
  std::string id;
};
struct DuplicateIdError : CorpusError {
  explicit DuplicateIdError(const std::string& id);
  std::string id;
};
struct MalformedManifestRowError : CorpusError {
  MalformedManifestRowError(size_t line_no, const std::string& detail);
  size_t line_no;
};
struct EmptyClassError : CorpusError {
  explicit EmptyClassError(Label label);
};
struct BadRatiosError : CorpusError {
  using CorpusError::CorpusError;
};
struct PoolOverlapError : CorpusError {
  explicit PoolOverlapError(const std::string& id);
  std::string id;
};

struct LoadResult {
  Corpus corpus;
  // Rows whose text file existed but was empty; the document is dropped.
  std::vector<std::string> skipped_ids;
};

// Manifest format: CSV with header `id,label,text_file,page_count,file_size_kb`.
// Text files are UTF-8 with pages separated by single U+000C characters.
// page_count and file_size_kb may be left empty; they then fall back to the
// form-feed page count and the text file size on disk.
LoadResult load_corpus(const std::filesystem::path& manifest,
                       const std::filesystem::path& text_dir);

// Optional comment becomes a leading `# ...` line; the loader skips comments.
// Written atomically (temp file + rename).
void write_manifest(const std::vector<Document>& documents,
                    const std::filesystem::path& path,
                    std::string_view comment = {});

// Seeded per-class shuffle followed by largest-remainder allocation, so each
// part's class mix tracks the source corpus within one document per class.
// Remainder ties go to train, then dev, then test.
Split stratified_split(const Corpus& corpus, const SplitRatios& ratios,
                       uint64_t seed);

// Adds positives from `positive_pool` (seeded, without replacement) until
// negatives outnumber positives by `target_neg_to_pos` within one document.
// If the pool runs dry the shortfall is filled by sampling existing positives
// with replacement. Negatives are never dropped. `held_out_ids` (dev + test)
// guards against a pool document leaking into evaluation.
TrainSet rebalance_train(const Corpus& train, const Corpus& positive_pool,
                         double target_neg_to_pos, uint64_t seed,
                         const std::unordered_set<std::string>& held_out_ids = {});

}  // namespace scopegate
