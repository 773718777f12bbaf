#pragma once

#include <cstdint>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/rng.hpp"
#include "scopegate/sparse.hpp"

namespace scopegate {

struct TreeNode {
  int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // x[feature] <= threshold goes left
  int32_t left = -1;
  int32_t right = -1;
  int32_t label = 0;  // class at a leaf
};

// CART with Gini impurity, grown until nodes are pure or hold fewer than two
// samples. Splits choose the (feature, midpoint threshold) pair with the
// largest impurity decrease; ties go to the lower feature index, then the
// lower threshold. With mtry > 0 each split considers a seeded random subset
// of features (the random-forest setting); mtry == 0 considers all.
class DecisionTree {
 public:
  struct Options {
    uint32_t mtry = 0;
    uint64_t seed = 0;
  };

  static DecisionTree fit(const Dataset& data, const Options& opts);
  // row_indices: sorted multiset of training rows (bootstrap samples repeat).
  static DecisionTree fit(const Dataset& data, std::vector<uint32_t> row_indices,
                          const Options& opts);

  int predict(const SparseVector& x) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  size_t depth() const;

  std::vector<TreeNode> nodes_;  // nodes_[0] is the root
};

}  // namespace scopegate
