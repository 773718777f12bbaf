#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/feature_space.hpp"
#include "scopegate/gnb.hpp"
#include "scopegate/linear_svm.hpp"
#include "scopegate/metrics.hpp"
#include "scopegate/mnb.hpp"
#include "scopegate/random_forest.hpp"

namespace scopegate {

enum class ModelKind { GNB, MNB, DT, RF, LinearSVM };

std::string_view model_kind_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

struct Hyperparams {
  double svm_c = 0.1;
  int rf_trees = 25;

  // "svm_c=0.1", "rf_trees=25", or "-" for kinds with no tuned knob.
  std::string describe(ModelKind kind) const;
};

struct HyperGrid {
  std::vector<double> svm_c{0.01, 0.05, 0.1};
  std::vector<int> rf_trees{20, 23, 25, 27, 30};
};

// A fitted classifier plus the feature space that maps a raw Document to its
// input vector. Prediction is deterministic; inputs whose indices exceed the
// training dimension raise DimensionMismatchError.
class TrainedModel {
 public:
  using Impl =
      std::variant<GaussianNB, MultinomialNB, DecisionTree, RandomForest, LinearSvm>;

  TrainedModel() = default;
  TrainedModel(ModelKind kind, Impl impl, FeatureSpace space, size_t input_dim,
               Hyperparams params)
      : kind_(kind),
        impl_(std::move(impl)),
        space_(std::move(space)),
        input_dim_(input_dim),
        params_(params) {}

  ModelKind kind() const { return kind_; }
  const FeatureSpace& space() const { return space_; }
  const Hyperparams& params() const { return params_; }
  size_t input_dim() const { return input_dim_; }
  const Impl& impl() const { return impl_; }

  int predict_vector(const SparseVector& x) const;
  Label predict(const Document& doc) const;

  // Versioned JSON serialization; a loaded model predicts identically.
  void save(const std::filesystem::path& path,
            std::string_view fingerprint = {}) const;
  static TrainedModel load(const std::filesystem::path& path);

 private:
  ModelKind kind_ = ModelKind::RF;
  Impl impl_;
  FeatureSpace space_;
  size_t input_dim_ = 0;
  Hyperparams params_;
};

// Fits one classifier of the requested kind. `space` travels with the model
// so predictions can start from raw documents.
TrainedModel train(ModelKind kind, const Dataset& data, const FeatureSpace& space,
                   const Hyperparams& params, uint64_t seed);

struct TuneOutcome {
  TrainedModel model;
  Hyperparams chosen;
  double dev_f1 = 0.0;
  // (hyperparams, dev F1) per grid point, in evaluation order.
  std::vector<std::pair<Hyperparams, double>> grid_results;
};

// Trains one model per grid point for the kind's tuned knob, scores
// positive-class F1 on dev, returns the best. Equal F1 keeps the smaller
// hyperparameter value. Kinds without a knob train once.
TuneOutcome tune(ModelKind kind, const Dataset& train_data, const Dataset& dev_data,
                 const FeatureSpace& space, const HyperGrid& grid, uint64_t seed);

// Positive-class F1 of a fitted model over a labeled dataset.
double dataset_f1(const TrainedModel& model, const Dataset& data);

}  // namespace scopegate
