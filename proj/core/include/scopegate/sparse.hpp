#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace scopegate {

// Sparse feature vector: entries sorted by column index, zero weights never
// stored. Indices refer to a feature space (vocabulary columns or structural
// slots) owned by the caller.
class SparseVector {
 public:
  using Entry = std::pair<uint32_t, double>;

  SparseVector() = default;

  // Takes arbitrary-order entries, sorts them, and drops zeros. Duplicate
  // indices are summed.
  static SparseVector from_entries(std::vector<Entry> entries);

  double at(uint32_t index) const;
  const std::vector<Entry>& entries() const { return entries_; }
  size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Largest stored index + 1, or 0 when empty.
  uint32_t min_dimension() const;

  double l1_norm() const;
  double l2_norm() const;
  double dot(const std::vector<double>& dense) const;

  void scale(double factor);

  bool operator==(const SparseVector&) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace scopegate
