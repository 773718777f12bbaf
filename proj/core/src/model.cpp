#include "scopegate/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "scopegate/csv.hpp"

namespace scopegate {

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::GNB:
      return "gnb";
    case ModelKind::MNB:
      return "mnb";
    case ModelKind::DT:
      return "dt";
    case ModelKind::RF:
      return "rf";
    case ModelKind::LinearSVM:
      return "svm";
  }
  return "rf";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "gnb") return ModelKind::GNB;
  if (text == "mnb") return ModelKind::MNB;
  if (text == "dt") return ModelKind::DT;
  if (text == "rf") return ModelKind::RF;
  if (text == "svm" || text == "linear-svm") return ModelKind::LinearSVM;
  throw std::invalid_argument("unknown model kind: " + std::string(text));
}

std::string Hyperparams::describe(ModelKind kind) const {
  switch (kind) {
    case ModelKind::LinearSVM:
      return "svm_c=" + format_double(svm_c);
    case ModelKind::RF:
      return "rf_trees=" + std::to_string(rf_trees);
    default:
      return "-";
  }
}

int TrainedModel::predict_vector(const SparseVector& x) const {
  if (x.min_dimension() > input_dim_) {
    throw DimensionMismatchError(
        "input has feature index " + std::to_string(x.min_dimension() - 1) +
        " outside model dimension " + std::to_string(input_dim_));
  }
  return std::visit([&](const auto& m) { return m.predict(x); }, impl_);
}

Label TrainedModel::predict(const Document& doc) const {
  return predict_vector(space_.transform(doc)) ? Label::InScope
                                               : Label::OutOfScope;
}

TrainedModel train(ModelKind kind, const Dataset& data, const FeatureSpace& space,
                   const Hyperparams& params, uint64_t seed) {
  data.require_both_classes();
  TrainedModel::Impl impl;
  switch (kind) {
    case ModelKind::GNB:
      impl = GaussianNB::fit(data);
      break;
    case ModelKind::MNB:
      impl = MultinomialNB::fit(data);
      break;
    case ModelKind::DT:
      impl = DecisionTree::fit(data, {0, seed});
      break;
    case ModelKind::RF:
      impl = RandomForest::fit(data, {params.rf_trees, 0, true, seed});
      break;
    case ModelKind::LinearSVM:
      impl = LinearSvm::fit(data, {params.svm_c, 50, seed});
      break;
  }
  return TrainedModel(kind, std::move(impl), space, data.num_features(), params);
}

double dataset_f1(const TrainedModel& model, const Dataset& data) {
  ConfusionCounts counts;
  for (size_t r = 0; r < data.size(); ++r) {
    const Label truth = data.label(r) ? Label::InScope : Label::OutOfScope;
    const Label pred = model.predict_vector(data.row(r)) ? Label::InScope
                                                         : Label::OutOfScope;
    counts.add(truth, pred);
  }
  return prf1(counts).f1;
}

TuneOutcome tune(ModelKind kind, const Dataset& train_data,
                 const Dataset& dev_data, const FeatureSpace& space,
                 const HyperGrid& grid, uint64_t seed) {
  std::vector<Hyperparams> points;
  switch (kind) {
    case ModelKind::LinearSVM: {
      if (grid.svm_c.empty()) throw ModelError("empty SVM C grid");
      std::vector<double> cs = grid.svm_c;
      std::sort(cs.begin(), cs.end());
      for (double c : cs) {
        Hyperparams p;
        p.svm_c = c;
        points.push_back(p);
      }
      break;
    }
    case ModelKind::RF: {
      if (grid.rf_trees.empty()) throw ModelError("empty RF tree grid");
      std::vector<int> ts = grid.rf_trees;
      std::sort(ts.begin(), ts.end());
      for (int t : ts) {
        Hyperparams p;
        p.rf_trees = t;
        points.push_back(p);
      }
      break;
    }
    default:
      points.push_back({});
      break;
  }

  TuneOutcome out;
  bool first = true;
  for (const Hyperparams& p : points) {
    TrainedModel m = train(kind, train_data, space, p, seed);
    const double f1 = dataset_f1(m, dev_data);
    out.grid_results.emplace_back(p, f1);
    // strict > keeps the smallest value on ties (points are ascending)
    if (first || f1 > out.dev_f1) {
      out.model = std::move(m);
      out.chosen = p;
      out.dev_f1 = f1;
      first = false;
    }
  }
  return out;
}

}  // namespace scopegate
