#include "scopegate/gnb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace scopegate {

GaussianNB GaussianNB::fit(const Dataset& data) {
  data.require_both_classes();
  const size_t d = data.num_features();
  const size_t n = data.size();

  GaussianNB model;
  for (int c = 0; c < 2; ++c) {
    model.mean_[c].assign(d, 0.0);
    model.var_[c].assign(d, 0.0);
    model.log_prior[c] = std::log(static_cast<double>(data.class_count(c)) /
                                  static_cast<double>(n));
  }

  // Accumulate sums per class; zeros contribute implicitly via the counts.
  std::array<std::vector<double>, 2> sum, sumsq;
  for (int c = 0; c < 2; ++c) {
    sum[c].assign(d, 0.0);
    sumsq[c].assign(d, 0.0);
  }
  std::vector<double> sum_all(d, 0.0), sumsq_all(d, 0.0);
  for (uint32_t f = 0; f < d; ++f) {
    for (const auto& [r, w] : data.column(f)) {
      const int c = data.label(r) ? 1 : 0;
      sum[c][f] += w;
      sumsq[c][f] += w * w;
      sum_all[f] += w;
      sumsq_all[f] += w * w;
    }
  }

  double max_var = 0.0;
  for (uint32_t f = 0; f < d; ++f) {
    const double mu = sum_all[f] / static_cast<double>(n);
    max_var = std::max(max_var, sumsq_all[f] / static_cast<double>(n) - mu * mu);
  }
  const double floor = 1e-9 * (max_var > 0.0 ? max_var : 1.0);

  for (int c = 0; c < 2; ++c) {
    const double nc = static_cast<double>(data.class_count(c));
    for (uint32_t f = 0; f < d; ++f) {
      const double mu = sum[c][f] / nc;
      double var = sumsq[c][f] / nc - mu * mu;
      model.mean_[c][f] = mu;
      model.var_[c][f] = std::max(var, floor);
    }
  }
  model.finalize();
  return model;
}

void GaussianNB::finalize() {
  for (int c = 0; c < 2; ++c) {
    const size_t d = mean_[c].size();
    neg_half_log_two_pi_var_[c].assign(d, 0.0);
    zero_base_[c] = 0.0;
    for (size_t f = 0; f < d; ++f) {
      const double coef = -0.5 * std::log(2.0 * std::numbers::pi * var_[c][f]);
      neg_half_log_two_pi_var_[c][f] = coef;
      const double mu = mean_[c][f];
      zero_base_[c] += coef - (mu * mu) / (2.0 * var_[c][f]);
    }
  }
}

std::array<double, 2> GaussianNB::log_likelihood(const SparseVector& x) const {
  std::array<double, 2> score{};
  for (int c = 0; c < 2; ++c) {
    double s = log_prior[c] + zero_base_[c];
    for (const auto& [f, v] : x.entries()) {
      if (f >= mean_[c].size()) {
        throw DimensionMismatchError("input feature index out of range");
      }
      const double mu = mean_[c][f];
      const double var = var_[c][f];
      const double dv = v - mu;
      // swap the cached x=0 term for the real one
      s += (-(dv * dv) + mu * mu) / (2.0 * var);
    }
    score[c] = s;
  }
  return score;
}

int GaussianNB::predict(const SparseVector& x) const {
  const auto s = log_likelihood(x);
  return s[1] > s[0] ? 1 : 0;
}

std::array<double, 2> GaussianNB::posteriors(const SparseVector& x) const {
  auto s = log_likelihood(x);
  const double m = std::max(s[0], s[1]);
  const double e0 = std::exp(s[0] - m);
  const double e1 = std::exp(s[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

}  // namespace scopegate
