#pragma once

#include <cstdint>

#include "scopegate/corpus.hpp"

namespace scopegate {

// Confusion counts for the positive (in-scope) class.
struct ConfusionCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
  uint64_t tn = 0;

  void add(Label truth, Label predicted);
  uint64_t total() const { return tp + fp + fn + tn; }
};

struct PrfMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Positive-class precision/recall/F1. Degenerate denominators yield 0
// rather than an error: no predicted positives -> precision 0, no actual
// positives -> recall 0, p + r == 0 -> f1 0.
PrfMetrics prf1(const ConfusionCounts& counts);

}  // namespace scopegate
