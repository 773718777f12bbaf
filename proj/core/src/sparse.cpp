#include "scopegate/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace scopegate {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  v.entries_.reserve(entries.size());
  for (const Entry& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      v.entries_.push_back(e);
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0.0; });
  return v;
}

double SparseVector::at(uint32_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0.0;
}

uint32_t SparseVector::min_dimension() const {
  return entries_.empty() ? 0 : entries_.back().first + 1;
}

double SparseVector::l1_norm() const {
  double s = 0.0;
  for (const Entry& e : entries_) s += std::abs(e.second);
  return s;
}

double SparseVector::l2_norm() const {
  double s = 0.0;
  for (const Entry& e : entries_) s += e.second * e.second;
  return std::sqrt(s);
}

double SparseVector::dot(const std::vector<double>& dense) const {
  double s = 0.0;
  for (const Entry& e : entries_) {
    if (e.first < dense.size()) s += e.second * dense[e.first];
  }
  return s;
}

void SparseVector::scale(double factor) {
  for (Entry& e : entries_) e.second *= factor;
  if (factor == 0.0) entries_.clear();
}

}  // namespace scopegate
