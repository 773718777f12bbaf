#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scopegate/sparse.hpp"

namespace scopegate {

struct SingleClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankedFeature {
  std::string feature;
  double ig_bits = 0.0;
};

// Scores are non-increasing; equal scores order by feature name.
using FeatureRanking = std::vector<RankedFeature>;

// IG(f) = H(Y) - H(Y|f) in bits, from empirical frequencies. Labels are 0/1
// and both classes must be present. Each feature is binarized by presence
// (a stored, nonzero entry counts as present) -- the treatment for
// bag-of-words columns.
FeatureRanking information_gain_presence(const std::vector<SparseVector>& rows,
                                         const std::vector<int>& labels,
                                         const std::vector<std::string>& names);

// Numeric columns are discretized by the single threshold that maximizes IG,
// searched over midpoints of consecutive distinct values. Columns with fewer
// than two distinct values score 0.
FeatureRanking information_gain_thresholded(
    const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
    const std::vector<std::string>& names);

// First min(n, len) feature names of the ranking.
std::vector<std::string> select_top_n(const FeatureRanking& ranking, size_t n);

// `rank,feature,ig_bits` rows, 1-based rank.
void write_ranking_csv(std::ostream& out, const FeatureRanking& ranking);

}  // namespace scopegate
