#pragma once

#include <cstdint>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/decision_tree.hpp"

namespace scopegate {

// Resolves even vote splits to class 0, the out-of-scope majority class.
int majority_vote(const std::vector<int>& votes);

// Bagged CART trees: bootstrap samples of training-set size, ceil(sqrt(d))
// features per split unless mtry overrides, majority vote. Per-tree seeds are
// derived up front from the master seed, so training is reproducible and
// trees are independent of each other.
class RandomForest {
 public:
  struct Options {
    int num_trees = 25;
    uint32_t mtry = 0;       // 0 = ceil(sqrt(num_features))
    bool bootstrap = true;   // false trains every tree on the full set
    uint64_t seed = 0;
  };

  static RandomForest fit(const Dataset& data, const Options& opts);

  int predict(const SparseVector& x) const;
  std::vector<int> votes(const SparseVector& x) const;
  const std::vector<DecisionTree>& trees() const { return trees_; }

  std::vector<DecisionTree> trees_;
};

}  // namespace scopegate
