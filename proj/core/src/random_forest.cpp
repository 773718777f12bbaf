#include "scopegate/random_forest.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "scopegate/rng.hpp"

namespace scopegate {

int majority_vote(const std::vector<int>& votes) {
  long diff = 0;  // positive-class votes minus negative-class votes
  for (int v : votes) diff += v ? 1 : -1;
  return diff > 0 ? 1 : 0;
}

RandomForest RandomForest::fit(const Dataset& data, const Options& opts) {
  data.require_both_classes();
  if (opts.num_trees < 1) throw ModelError("forest needs at least one tree");

  const size_t n = data.size();
  const uint32_t d = static_cast<uint32_t>(data.num_features());
  const uint32_t mtry =
      opts.mtry > 0 ? opts.mtry
                    : static_cast<uint32_t>(
                          std::ceil(std::sqrt(static_cast<double>(d))));

  // Derive all per-tree work up front; the result must not depend on
  // training order.
  struct TreeTask {
    std::vector<uint32_t> rows;
    uint64_t seed;
  };
  SplitMix64 master(opts.seed);
  std::vector<TreeTask> tasks(static_cast<size_t>(opts.num_trees));
  for (auto& task : tasks) {
    SplitMix64 tree_rng(master.next());
    if (opts.bootstrap) {
      task.rows.resize(n);
      for (size_t i = 0; i < n; ++i) {
        task.rows[i] = static_cast<uint32_t>(tree_rng.next_below(n));
      }
      std::sort(task.rows.begin(), task.rows.end());
    } else {
      task.rows.resize(n);
      std::iota(task.rows.begin(), task.rows.end(), 0u);
    }
    task.seed = tree_rng.next();
  }

  RandomForest forest;
  forest.trees_.resize(tasks.size());

  const unsigned workers =
      std::min<unsigned>(std::thread::hardware_concurrency(),
                         static_cast<unsigned>(tasks.size()));
  if (workers > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          forest.trees_[i] = DecisionTree::fit(
              data, std::move(tasks[i].rows), {mtry, tasks[i].seed});
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (size_t i = 0; i < tasks.size(); ++i) {
      forest.trees_[i] = DecisionTree::fit(data, std::move(tasks[i].rows),
                                           {mtry, tasks[i].seed});
    }
  }
  return forest;
}

std::vector<int> RandomForest::votes(const SparseVector& x) const {
  std::vector<int> out;
  out.reserve(trees_.size());
  for (const DecisionTree& t : trees_) out.push_back(t.predict(x));
  return out;
}

int RandomForest::predict(const SparseVector& x) const {
  return majority_vote(votes(x));
}

}  // namespace scopegate
