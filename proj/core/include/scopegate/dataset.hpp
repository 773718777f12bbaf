#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scopegate/sparse.hpp"

namespace scopegate {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingleClassTrainingSetError : ModelError {
  SingleClassTrainingSetError()
      : ModelError("training set contains a single class") {}
};
struct NegativeWeightError : ModelError {
  using ModelError::ModelError;
};
struct DimensionMismatchError : ModelError {
  using ModelError::ModelError;
};

// Design matrix for the classifiers: sparse rows plus a column-major view
// (built once) for split search in trees. Labels are 0 (out of scope) and
// 1 (in scope).
class Dataset {
 public:
  Dataset() = default;

  Dataset(std::vector<SparseVector> rows, std::vector<int> labels,
          size_t num_features)
      : rows_(std::move(rows)),
        labels_(std::move(labels)),
        num_features_(num_features),
        columns_(num_features) {
    if (rows_.size() != labels_.size()) {
      throw std::invalid_argument("rows/labels size mismatch");
    }
    for (uint32_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [idx, w] : rows_[r].entries()) {
        if (idx >= num_features_) {
          throw DimensionMismatchError(
              "row " + std::to_string(r) + " has feature index " +
              std::to_string(idx) + " outside dimension " +
              std::to_string(num_features_));
        }
        columns_[idx].emplace_back(r, w);
      }
      class_count_[labels_[r] ? 1 : 0] += 1;
    }
  }

  size_t size() const { return rows_.size(); }
  size_t num_features() const { return num_features_; }
  const SparseVector& row(size_t i) const { return rows_[i]; }
  int label(size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  // Row-sorted (row, value) pairs of one column.
  const std::vector<std::pair<uint32_t, double>>& column(uint32_t f) const {
    return columns_[f];
  }
  size_t class_count(int c) const { return class_count_[c ? 1 : 0]; }

  void require_both_classes() const {
    if (class_count_[0] == 0 || class_count_[1] == 0) {
      throw SingleClassTrainingSetError();
    }
  }

 private:
  std::vector<SparseVector> rows_;
  std::vector<int> labels_;
  size_t num_features_ = 0;
  std::vector<std::vector<std::pair<uint32_t, double>>> columns_;
  size_t class_count_[2] = {0, 0};
};

}  // namespace scopegate
