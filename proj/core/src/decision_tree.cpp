#include "scopegate/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scopegate {

namespace {

struct SplitChoice {
  bool found = false;
  uint32_t feature = 0;
  double threshold = 0.0;
  double gain = 0.0;
};

double gini(double n0, double n1) {
  const double n = n0 + n1;
  if (n <= 0.0) return 0.0;
  const double p0 = n0 / n;
  const double p1 = n1 / n;
  return 1.0 - p0 * p0 - p1 * p1;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const DecisionTree::Options& opts)
      : data_(data), rng_(opts.seed), mtry_(opts.mtry) {
    if (mtry_ > 0) {
      feature_pool_.resize(data.num_features());
      std::iota(feature_pool_.begin(), feature_pool_.end(), 0u);
    }
  }

  int32_t build(std::vector<uint32_t>& rows) {
    size_t n0 = 0, n1 = 0;
    for (uint32_t r : rows) (data_.label(r) ? n1 : n0) += 1;

    const int majority = n1 > n0 ? 1 : 0;  // tie -> class 0
    if (rows.size() < 2 || n0 == 0 || n1 == 0) return make_leaf(majority);

    SplitChoice split = best_split(rows, n0, n1);
    if (!split.found) return make_leaf(majority);

    std::vector<uint32_t> left_rows, right_rows;
    left_rows.reserve(rows.size());
    right_rows.reserve(rows.size());
    for_feature_values(rows, split.feature, [&](uint32_t r, double v) {
      (v <= split.threshold ? left_rows : right_rows).push_back(r);
    });
    if (left_rows.empty() || right_rows.empty()) return make_leaf(majority);
    rows.clear();
    rows.shrink_to_fit();

    const int32_t id = static_cast<int32_t>(nodes_.size());
    nodes_.push_back({static_cast<int32_t>(split.feature), split.threshold,
                      -1, -1, majority});
    const int32_t left = build(left_rows);
    const int32_t right = build(right_rows);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  std::vector<TreeNode> take_nodes() { return std::move(nodes_); }

 private:
  int32_t make_leaf(int label) {
    nodes_.push_back({-1, 0.0, -1, -1, label});
    return static_cast<int32_t>(nodes_.size() - 1);
  }

  // Calls fn(row, value) for every row in the sorted multiset `rows`,
  // merging against the column's sorted nonzero entries.
  template <typename Fn>
  void for_feature_values(const std::vector<uint32_t>& rows, uint32_t feature,
                          Fn&& fn) const {
    const auto& col = data_.column(feature);
    size_t ci = 0;
    for (uint32_t r : rows) {
      while (ci < col.size() && col[ci].first < r) ++ci;
      if (ci < col.size() && col[ci].first == r) {
        fn(r, col[ci].second);
      } else {
        fn(r, 0.0);
      }
    }
  }

  SplitChoice best_split(const std::vector<uint32_t>& rows, size_t n0, size_t n1) {
    const double total = static_cast<double>(rows.size());
    const double parent = gini(static_cast<double>(n0), static_cast<double>(n1));

    SplitChoice best;
    const auto candidates = candidate_features();
    std::vector<std::pair<double, int>> values;
    for (uint32_t f : candidates) {
      values.clear();
      for_feature_values(rows, f, [&](uint32_t r, double v) {
        values.emplace_back(v, data_.label(r) ? 1 : 0);
      });
      std::sort(values.begin(), values.end());
      if (values.front().first == values.back().first) continue;

      double l0 = 0.0, l1 = 0.0;
      for (size_t i = 0; i + 1 < values.size(); ++i) {
        (values[i].second ? l1 : l0) += 1.0;
        if (values[i].first == values[i + 1].first) continue;
        const double left_n = l0 + l1;
        const double right_n = total - left_n;
        const double weighted = (left_n / total) * gini(l0, l1) +
                                (right_n / total) *
                                    gini(static_cast<double>(n0) - l0,
                                         static_cast<double>(n1) - l1);
        const double gain = parent - weighted;
        if (gain > best.gain + 1e-12) {
          const double mid =
              values[i].first + (values[i + 1].first - values[i].first) / 2.0;
          best = {true, f, mid, gain};
        }
      }
    }
    if (best.found && best.gain <= 1e-12) best.found = false;
    return best;
  }

  std::vector<uint32_t> candidate_features() {
    const uint32_t d = static_cast<uint32_t>(data_.num_features());
    if (mtry_ == 0 || mtry_ >= d) {
      std::vector<uint32_t> all(d);
      std::iota(all.begin(), all.end(), 0u);
      return all;
    }
    // Partial Fisher-Yates over a persistent pool; sorted afterwards so the
    // tie rule (lowest feature index) is independent of draw order.
    for (uint32_t i = 0; i < mtry_; ++i) {
      const uint32_t j =
          i + static_cast<uint32_t>(rng_.next_below(d - i));
      std::swap(feature_pool_[i], feature_pool_[j]);
    }
    std::vector<uint32_t> picked(feature_pool_.begin(),
                                 feature_pool_.begin() + mtry_);
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  const Dataset& data_;
  SplitMix64 rng_;
  uint32_t mtry_;
  std::vector<uint32_t> feature_pool_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

DecisionTree DecisionTree::fit(const Dataset& data, const Options& opts) {
  std::vector<uint32_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0u);
  return fit(data, std::move(rows), opts);
}

DecisionTree DecisionTree::fit(const Dataset& data,
                               std::vector<uint32_t> row_indices,
                               const Options& opts) {
  data.require_both_classes();
  if (row_indices.empty()) throw ModelError("cannot fit a tree on zero rows");
  TreeBuilder builder(data, opts);
  std::vector<uint32_t> rows = std::move(row_indices);
  builder.build(rows);
  DecisionTree tree;
  tree.nodes_ = builder.take_nodes();
  return tree;
}

int DecisionTree::predict(const SparseVector& x) const {
  int32_t at = 0;
  while (nodes_[at].feature >= 0) {
    const TreeNode& n = nodes_[at];
    at = x.at(static_cast<uint32_t>(n.feature)) <= n.threshold ? n.left : n.right;
  }
  return nodes_[at].label;
}

size_t DecisionTree::depth() const {
  // iterative depth over the implicit tree
  std::vector<std::pair<int32_t, size_t>> stack{{0, 1}};
  size_t best = 0;
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    const TreeNode& n = nodes_[id];
    if (n.feature >= 0) {
      stack.push_back({n.left, d + 1});
      stack.push_back({n.right, d + 1});
    }
  }
  return best;
}

}  // namespace scopegate
