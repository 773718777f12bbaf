#include "scopegate/metrics.hpp"

namespace scopegate {

void ConfusionCounts::add(Label truth, Label predicted) {
  const bool t = truth == Label::InScope;
  const bool p = predicted == Label::InScope;
  if (t && p) {
    ++tp;
  } else if (!t && p) {
    ++fp;
  } else if (t && !p) {
    ++fn;
  } else {
    ++tn;
  }
}

PrfMetrics prf1(const ConfusionCounts& c) {
  PrfMetrics m;
  const double pred_pos = static_cast<double>(c.tp + c.fp);
  const double actual_pos = static_cast<double>(c.tp + c.fn);
  m.precision = pred_pos > 0.0 ? static_cast<double>(c.tp) / pred_pos : 0.0;
  m.recall = actual_pos > 0.0 ? static_cast<double>(c.tp) / actual_pos : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

}  // namespace scopegate
