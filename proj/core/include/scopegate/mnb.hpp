#pragma once

#include <array>
#include <vector>

#include "scopegate/dataset.hpp"
#include "scopegate/sparse.hpp"

namespace scopegate {

// Multinomial naive Bayes with Laplace add-one smoothing, over non-negative
// (possibly fractional) feature weights. Training rejects negative weights.
class MultinomialNB {
 public:
  static MultinomialNB fit(const Dataset& data);

  int predict(const SparseVector& x) const;
  std::array<double, 2> posteriors(const SparseVector& x) const;

  size_t num_features() const { return log_theta_[0].size(); }

  // serialized state
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> log_theta_;

 private:
  std::array<double, 2> log_likelihood(const SparseVector& x) const;
};

}  // namespace scopegate
