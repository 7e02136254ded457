#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "codmeans/error.hpp"

namespace codmeans {

using DenseVector = std::vector<double>;

struct SparseEntry {
  std::uint32_t id;
  double weight;
};

// Sparse feature vector with strictly increasing feature ids and no stored
// zeros. Document vectors are L2-normalized on construction by the
// vectorizer; an empty vector is the degenerate (all out-of-vocabulary)
// case and behaves as the zero vector everywhere.
class SparseVector {
 public:
  SparseVector() = default;

  // Entries must be sorted by id with no duplicates; zero weights are
  // dropped, negative or non-finite weights are rejected.
  static SparseVector from_entries(std::vector<SparseEntry> entries) {
    std::vector<SparseEntry> kept;
    kept.reserve(entries.size());
    std::uint32_t prev = 0;
    bool first = true;
    for (const SparseEntry& e : entries) {
      if (!first && e.id <= prev) {
        throw Error("sparse vector entries must have strictly increasing ids");
      }
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
        throw Error("sparse vector weights must be finite and non-negative");
      }
      prev = e.id;
      first = false;
      if (e.weight != 0.0) kept.push_back(e);
    }
    SparseVector v;
    v.entries_ = std::move(kept);
    return v;
  }

  const std::vector<SparseEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  double squared_norm() const {
    double s = 0.0;
    for (const SparseEntry& e : entries_) s += e.weight * e.weight;
    return s;
  }

  double norm() const { return std::sqrt(squared_norm()); }

  void scale(double factor) {
    for (SparseEntry& e : entries_) e.weight *= factor;
  }

  // L2 normalization; returns false and leaves the vector untouched when the
  // norm is zero (degenerate document).
  bool normalize() {
    double n = norm();
    if (n == 0.0) return false;
    scale(1.0 / n);
    return true;
  }

 private:
  std::vector<SparseEntry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].id < eb[j].id) {
      ++i;
    } else if (eb[j].id < ea[i].id) {
      ++j;
    } else {
      s += ea[i].weight * eb[j].weight;
      ++i;
      ++j;
    }
  }
  return s;
}

inline double dot(const SparseVector& a, const DenseVector& c) {
  double s = 0.0;
  for (const SparseEntry& e : a.entries()) {
    if (e.id < c.size()) s += e.weight * c[e.id];
  }
  return s;
}

inline double squared_norm(const DenseVector& c) {
  double s = 0.0;
  for (double x : c) s += x * x;
  return s;
}

// Shared distance kernel: everything in the toolkit measures distance in the
// same Euclidean space, squared for the clustering objective and plain for
// the quality metrics.
inline double squared_distance(const SparseVector& a, const SparseVector& b) {
  double d2 = a.squared_norm() + b.squared_norm() - 2.0 * dot(a, b);
  return d2 > 0.0 ? d2 : 0.0;
}

inline double distance(const SparseVector& a, const SparseVector& b) {
  return std::sqrt(squared_distance(a, b));
}

// Point-to-centroid distance; pass the cached centroid squared norm.
inline double squared_distance(const SparseVector& a, const DenseVector& c,
                               double c_squared_norm) {
  double d2 = a.squared_norm() + c_squared_norm - 2.0 * dot(a, c);
  return d2 > 0.0 ? d2 : 0.0;
}

inline double squared_distance(const DenseVector& a, const DenseVector& b) {
  double s = 0.0;
  std::size_t n = a.size() > b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    double ai = i < a.size() ? a[i] : 0.0;
    double bi = i < b.size() ? b[i] : 0.0;
    s += (ai - bi) * (ai - bi);
  }
  return s;
}

inline void add_to(const SparseVector& a, DenseVector& acc) {
  for (const SparseEntry& e : a.entries()) {
    if (e.id >= acc.size()) acc.resize(e.id + 1, 0.0);
    acc[e.id] += e.weight;
  }
}

}  // namespace codmeans
