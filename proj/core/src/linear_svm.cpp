#include "scopegate/linear_svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scopegate/rng.hpp"

namespace scopegate {

LinearSvm LinearSvm::fit(const Dataset& data, const Options& opts) {
  data.require_both_classes();
  if (opts.c <= 0.0) throw ModelError("SVM C must be positive");

  const size_t n = data.size();
  const size_t d = data.num_features();
  const double lambda = 1.0 / (opts.c * static_cast<double>(n));

  // w is kept as scale * v so the per-step shrink does not touch every
  // coordinate.
  std::vector<double> v(d, 0.0);
  double scale = 1.0;
  double bias = 0.0;

  const auto materialize = [&] {
    for (double& w : v) w *= scale;
    scale = 1.0;
  };

  SplitMix64 rng(opts.seed);
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);

  uint64_t t = 0;
  for (int epoch = 0; epoch < opts.epochs; ++epoch) {
    shuffle(order, rng);
    for (uint32_t r : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double y = data.label(r) ? 1.0 : -1.0;
      const SparseVector& x = data.row(r);

      const double m = y * (scale * x.dot(v) + bias);
      const double shrink = 1.0 - eta * lambda;  // 0 at t == 1
      if (shrink <= 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        scale = 1.0;
      } else {
        scale *= shrink;
        if (scale < 1e-9) materialize();
      }
      if (m < 1.0) {
        const double step = eta * y / scale;
        for (const auto& [f, val] : x.entries()) v[f] += step * val;
        bias += eta * y;
      }
    }
  }
  materialize();

  LinearSvm model;
  model.weights_ = std::move(v);
  model.bias_ = bias;
  model.lambda_ = lambda;
  return model;
}

double LinearSvm::margin(const SparseVector& x) const {
  if (x.min_dimension() > weights_.size()) {
    throw DimensionMismatchError("input feature index out of range");
  }
  return x.dot(weights_) + bias_;
}

int LinearSvm::predict(const SparseVector& x) const {
  return margin(x) > 0.0 ? 1 : 0;
}

double LinearSvm::objective(const Dataset& data) const {
  double sq = 0.0;
  for (double w : weights_) sq += w * w;
  double hinge = 0.0;
  for (size_t r = 0; r < data.size(); ++r) {
    const double y = data.label(r) ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - y * margin(data.row(r)));
  }
  return 0.5 * lambda_ * sq +
         hinge / std::max<size_t>(1, data.size());
}

}  // namespace scopegate
