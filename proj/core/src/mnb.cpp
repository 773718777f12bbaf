#include "scopegate/mnb.hpp"

#include <cmath>

namespace scopegate {

MultinomialNB MultinomialNB::fit(const Dataset& data) {
  data.require_both_classes();
  const size_t d = data.num_features();

  MultinomialNB model;
  std::array<std::vector<double>, 2> count;
  std::array<double, 2> total{};
  for (int c = 0; c < 2; ++c) count[c].assign(d, 0.0);

  for (size_t r = 0; r < data.size(); ++r) {
    const int c = data.label(r) ? 1 : 0;
    for (const auto& [f, w] : data.row(r).entries()) {
      if (w < 0.0) {
        throw NegativeWeightError(
            "multinomial naive Bayes requires non-negative feature weights");
      }
      count[c][f] += w;
      total[c] += w;
    }
  }

  for (int c = 0; c < 2; ++c) {
    model.log_prior[c] = std::log(static_cast<double>(data.class_count(c)) /
                                  static_cast<double>(data.size()));
    model.log_theta_[c].assign(d, 0.0);
    const double denom = std::log(total[c] + static_cast<double>(d));
    for (size_t f = 0; f < d; ++f) {
      model.log_theta_[c][f] = std::log(1.0 + count[c][f]) - denom;
    }
  }
  return model;
}

std::array<double, 2> MultinomialNB::log_likelihood(const SparseVector& x) const {
  std::array<double, 2> score = log_prior;
  for (const auto& [f, v] : x.entries()) {
    if (f >= log_theta_[0].size()) {
      throw DimensionMismatchError("input feature index out of range");
    }
    score[0] += v * log_theta_[0][f];
    score[1] += v * log_theta_[1][f];
  }
  return score;
}

int MultinomialNB::predict(const SparseVector& x) const {
  const auto s = log_likelihood(x);
  return s[1] > s[0] ? 1 : 0;
}

std::array<double, 2> MultinomialNB::posteriors(const SparseVector& x) const {
  auto s = log_likelihood(x);
  const double m = std::max(s[0], s[1]);
  const double e0 = std::exp(s[0] - m);
  const double e1 = std::exp(s[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

}  // namespace scopegate
