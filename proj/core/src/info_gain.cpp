#include "scopegate/info_gain.hpp"

#include <algorithm>
#include <cmath>

#include "scopegate/csv.hpp"

namespace scopegate {

namespace {

double entropy_bits(double n_neg, double n_pos) {
  const double n = n_neg + n_pos;
  if (n <= 0.0) return 0.0;
  double h = 0.0;
  for (double c : {n_neg, n_pos}) {
    if (c > 0.0) {
      const double p = c / n;
      h -= p * std::log2(p);
    }
  }
  return h;
}

void check_labels(const std::vector<int>& labels) {
  bool has0 = false, has1 = false;
  for (int y : labels) (y ? has1 : has0) = true;
  if (!has0 || !has1) {
    throw SingleClassError(
        "information gain needs both classes present; got a single class");
  }
}

void sort_ranking(FeatureRanking& ranking) {
  std::sort(ranking.begin(), ranking.end(),
            [](const RankedFeature& a, const RankedFeature& b) {
              if (a.ig_bits != b.ig_bits) return a.ig_bits > b.ig_bits;
              return a.feature < b.feature;
            });
}

// Split IG from a 2x2 contingency table: counts of (side, class).
double split_gain(double h_y, double left_neg, double left_pos,
                  double right_neg, double right_pos) {
  const double n = left_neg + left_pos + right_neg + right_pos;
  const double left = left_neg + left_pos;
  const double right = right_neg + right_pos;
  double h_cond = 0.0;
  if (left > 0.0) h_cond += (left / n) * entropy_bits(left_neg, left_pos);
  if (right > 0.0) h_cond += (right / n) * entropy_bits(right_neg, right_pos);
  return h_y - h_cond;
}

}  // namespace

FeatureRanking information_gain_presence(const std::vector<SparseVector>& rows,
                                         const std::vector<int>& labels,
                                         const std::vector<std::string>& names) {
  if (rows.size() != labels.size() || rows.size() < 2) {
    throw std::invalid_argument("feature matrix and labels must align, >= 2 rows");
  }
  check_labels(labels);

  const size_t num_features = names.size();
  std::vector<double> present_neg(num_features, 0.0), present_pos(num_features, 0.0);
  double total_neg = 0.0, total_pos = 0.0;
  for (size_t r = 0; r < rows.size(); ++r) {
    const bool pos = labels[r] != 0;
    (pos ? total_pos : total_neg) += 1.0;
    for (const auto& [idx, w] : rows[r].entries()) {
      if (idx < num_features && w != 0.0) {
        (pos ? present_pos[idx] : present_neg[idx]) += 1.0;
      }
    }
  }

  const double h_y = entropy_bits(total_neg, total_pos);
  FeatureRanking ranking;
  ranking.reserve(num_features);
  for (size_t f = 0; f < num_features; ++f) {
    const double gain =
        split_gain(h_y, total_neg - present_neg[f], total_pos - present_pos[f],
                   present_neg[f], present_pos[f]);
    ranking.push_back({names[f], std::max(0.0, gain)});
  }
  sort_ranking(ranking);
  return ranking;
}

FeatureRanking information_gain_thresholded(
    const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
    const std::vector<std::string>& names) {
  if (rows.size() != labels.size() || rows.size() < 2) {
    throw std::invalid_argument("feature matrix and labels must align, >= 2 rows");
  }
  check_labels(labels);

  const size_t num_features = names.size();
  double total_neg = 0.0, total_pos = 0.0;
  for (int y : labels) (y ? total_pos : total_neg) += 1.0;
  const double h_y = entropy_bits(total_neg, total_pos);

  FeatureRanking ranking;
  ranking.reserve(num_features);
  std::vector<std::pair<double, int>> column(rows.size());
  for (size_t f = 0; f < num_features; ++f) {
    for (size_t r = 0; r < rows.size(); ++r) {
      column[r] = {f < rows[r].size() ? rows[r][f] : 0.0, labels[r]};
    }
    std::sort(column.begin(), column.end());

    double best = 0.0;
    double left_neg = 0.0, left_pos = 0.0;
    for (size_t r = 0; r + 1 < column.size(); ++r) {
      (column[r].second ? left_pos : left_neg) += 1.0;
      if (column[r].first == column[r + 1].first) continue;
      const double gain = split_gain(h_y, left_neg, left_pos,
                                     total_neg - left_neg, total_pos - left_pos);
      best = std::max(best, gain);
    }
    ranking.push_back({names[f], best});
  }
  sort_ranking(ranking);
  return ranking;
}

std::vector<std::string> select_top_n(const FeatureRanking& ranking, size_t n) {
  std::vector<std::string> out;
  const size_t take = std::min(n, ranking.size());
  out.reserve(take);
  for (size_t i = 0; i < take; ++i) out.push_back(ranking[i].feature);
  return out;
}

void write_ranking_csv(std::ostream& out, const FeatureRanking& ranking) {
  out << "rank,feature,ig_bits\n";
  for (size_t i = 0; i < ranking.size(); ++i) {
    out << join_csv_row({std::to_string(i + 1), ranking[i].feature,
                         format_double(ranking[i].ig_bits)})
        << '\n';
  }
}

}  // namespace scopegate
