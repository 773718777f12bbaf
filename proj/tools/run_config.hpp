#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scopegate/corpus.hpp"
#include "scopegate/experiment.hpp"
#include "scopegate/model.hpp"

namespace scopegate::cli {

// Effective run configuration. Values resolve in order: built-in default,
// config file, SCOPEGATE_STOPWORDS (stopword file only), command-line flag.
// Fields are kept as strings until a command needs them, so the fingerprint
// covers exactly what the user wrote.
struct RunConfig {
  // [corpus]
  std::string manifest;
  std::string text_dir = ".";
  std::string pool_manifest;
  // [split]
  std::string ratios = "0.6,0.2,0.2";
  uint64_t seed = 1;
  // [eval]
  std::string seeds = "1,2,3";
  double target_neg_to_pos = 2.0;
  // [features]
  std::string features = "bow";  // bow | str
  std::string portion = "all";
  std::string weighting = "tfidf";
  uint32_t min_df = 5;
  int top_n = 0;  // 0 = no feature selection
  // [models]
  std::string model = "rf";
  std::string svm_c = "0.01,0.05,0.1";
  std::string rf_trees = "20,23,25,27,30";
  // [textproc]
  std::string stopwords;  // file path; empty = built-in list
  // [output]
  std::string out_dir = "out";
  // [sweep]
  std::string axis = "portion";  // portion | bow-top-n | str-top-n
  std::string x_values = "100,300,500,700,1000,2000";
  std::string n_values;  // empty = axis default

  // INI-style file: [section] headers, key = value lines, # comments.
  // Unknown section/key pairs are errors.
  void apply_file(const std::filesystem::path& path);
  void apply_env();

  // FNV-1a over the canonical field dump; stable across runs and platforms.
  std::string fingerprint() const;
  std::string dump() const;

  // Typed views (throw std::invalid_argument / CorpusError on bad input).
  SplitRatios parsed_ratios() const;
  std::vector<uint64_t> parsed_seeds() const;
  PortionMode parsed_portion() const;
  WeightingScheme parsed_weighting() const;
  ModelKind parsed_model() const;
  HyperGrid parsed_grid() const;
  std::vector<int> parsed_x_values() const;
  std::vector<int> parsed_n_values() const;
  SweepAxis parsed_sweep_axis() const;
  FeatureAxis parsed_feature_axis() const;
  std::vector<std::string> load_stopword_list() const;
  ExperimentPlan make_plan() const;
};

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
std::vector<uint64_t> parse_seed_list(const std::string& text);

}  // namespace scopegate::cli
