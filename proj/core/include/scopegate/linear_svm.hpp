#pragma once

#include <cstdint>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/sparse.hpp"

namespace scopegate {

// Linear SVM trained by Pegasos-style stochastic subgradient descent on the
// hinge loss: lambda = 1/(C*n), learning rate 1/(lambda*t), fixed epoch
// budget, seeded shuffling each epoch, unregularized bias.
class LinearSvm {
 public:
  struct Options {
    double c = 0.1;
    int epochs = 50;
    uint64_t seed = 0;
  };

  static LinearSvm fit(const Dataset& data, const Options& opts);

  int predict(const SparseVector& x) const;  // margin 0 resolves to class 0
  double margin(const SparseVector& x) const;

  // lambda/2 * ||w||^2 + mean hinge loss over the dataset.
  double objective(const Dataset& data) const;

  size_t num_features() const { return weights_.size(); }

  // serialized state
  std::vector<double> weights_;
  double bias_ = 0.0;
  double lambda_ = 0.0;
};

}  // namespace scopegate
