#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scopegate/corpus.hpp"
#include "scopegate/metrics.hpp"
#include "scopegate/model.hpp"

namespace scopegate {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadAxisError : EvalError {
  using EvalError::EvalError;
};

// One row of the comparison table: which features feed the model.
//   BowAll     - bag of words over the full text
//   BowPortion - bag of words over a document portion (first / first+last)
//   FsBow      - full-text bag of words cut to the top-N terms by IG
//   Str        - all structural features
//   FsStr      - top-N structural features by IG
struct FeatureAxis {
  enum class Kind { BowAll, BowPortion, FsBow, Str, FsStr };

  Kind kind = Kind::BowAll;
  PortionMode portion = PortionMode::all();  // BowPortion
  int top_n = 0;                             // FsBow / FsStr

  static FeatureAxis bow_all() { return {Kind::BowAll, PortionMode::all(), 0}; }
  static FeatureAxis bow_portion(PortionMode mode) {
    return {Kind::BowPortion, mode, 0};
  }
  static FeatureAxis fs_bow(int n) { return {Kind::FsBow, PortionMode::all(), n}; }
  static FeatureAxis structural() { return {Kind::Str, PortionMode::all(), 0}; }
  static FeatureAxis fs_structural(int n) {
    return {Kind::FsStr, PortionMode::all(), n};
  }

  // "bow-all", "bow-first-100", "bow-first+last-100", "fs-bow-300", "str",
  // "fs-str-10"
  std::string label() const;
};

struct ExperimentPlan {
  SplitRatios ratios;
  double target_neg_to_pos = 2.0;
  FeatureAxis axis;
  ModelKind model = ModelKind::RF;
  WeightingScheme weighting = WeightingScheme::TfIdf;
  uint32_t min_df = 5;
  HyperGrid grid;
  std::vector<uint64_t> seeds{1, 2, 3};
  std::vector<std::string> stopwords;  // empty -> built-in list
};

struct SeedOutcome {
  uint64_t seed = 0;
  PrfMetrics metrics;
  ConfusionCounts counts;
  Hyperparams chosen;
  double dev_f1 = 0.0;
};

struct EvalReport {
  std::string axis_label;
  ModelKind model = ModelKind::RF;
  PrfMetrics mean;  // arithmetic mean of the per-seed metrics
  std::vector<SeedOutcome> per_seed;
};

// Records which documents had their content read, and in which pipeline
// stage, so tests can prove the test split is untouched until final
// evaluation.
class AccessAudit {
 public:
  enum class Stage { TrainFeatures, DevTuning, TestEval };

  struct Record {
    std::string id;
    Stage stage;
    uint64_t sequence;
  };

  void note(const std::string& id, Stage stage) {
    records_.push_back({id, stage, next_++});
  }
  const std::vector<Record>& records() const { return records_; }

 private:
  std::vector<Record> records_;
  uint64_t next_ = 0;
};

struct BuiltFeatures {
  FeatureSpace space;
  Dataset train;  // the training documents, already transformed
};

// Builds the feature space (vocabulary, IG selection) from the given
// training documents only, and returns them transformed. Shared by the
// experiment runner and the train/rank commands.
BuiltFeatures build_features(const std::vector<Document>& train_docs,
                             const FeatureAxis& axis, WeightingScheme weighting,
                             uint32_t min_df, std::vector<std::string> stopwords,
                             AccessAudit* audit = nullptr);

// Transforms documents through a frozen space.
Dataset transform_documents(const FeatureSpace& space,
                            const std::vector<Document>& docs,
                            AccessAudit* audit = nullptr,
                            AccessAudit::Stage stage = AccessAudit::Stage::TestEval);

// The full protocol, once per seed: stratified split; rebalance the training
// set to the target negative:positive ratio (pool first, oversampling
// fallback); build the feature space from the rebalanced training set only;
// tune on dev; evaluate exactly once on test. Means are over seeds.
// Errors from inner stages are rethrown with the seed and stage attached.
EvalReport run_experiment(const ExperimentPlan& plan, const Corpus& corpus,
                          const Corpus* positive_pool = nullptr,
                          AccessAudit* audit = nullptr);

struct SweepAxis {
  enum class Kind { Portion, TopNBow, TopNStr };
  Kind kind = Kind::Portion;
  // Portion: the X values (each contributes first-X and first+last-X rows).
  // TopN*: the N values. A full-feature baseline row is always appended.
  std::vector<int> values;

  static std::vector<int> default_portion_x() {
    return {100, 300, 500, 700, 1000, 2000};
  }
  static std::vector<int> default_bow_n() { return {300, 500, 1000, 2000, 3000}; }
  static std::vector<int> default_str_n() { return {10, 20, 30}; }
};

// One EvalReport per axis value (plus the baseline row), in a fixed order.
std::vector<EvalReport> sweep(const ExperimentPlan& base, const SweepAxis& axis,
                              const Corpus& corpus,
                              const Corpus* positive_pool = nullptr);

}  // namespace scopegate
