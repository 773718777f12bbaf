#pragma once

#include <array>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/sparse.hpp"

namespace scopegate {

// Gaussian naive Bayes over dense feature semantics (absent sparse entries
// are zeros). Per-class, per-feature means and variances with a relative
// variance floor so constant features cannot produce degenerate likelihoods.
class GaussianNB {
 public:
  static GaussianNB fit(const Dataset& data);

  int predict(const SparseVector& x) const;
  std::array<double, 2> posteriors(const SparseVector& x) const;

  size_t num_features() const { return mean_[0].size(); }

  // serialized state
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> mean_;
  std::array<std::vector<double>, 2> var_;

  // Recomputes scoring caches after deserialization.
  void finalize();

 private:
  std::array<double, 2> log_likelihood(const SparseVector& x) const;

  // cached: sum over features of log N(0; mu, var) per class
  std::array<double, 2> zero_base_{};
  std::array<std::vector<double>, 2> neg_half_log_two_pi_var_;
};

}  // namespace scopegate
