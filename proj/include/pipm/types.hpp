#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

namespace pipm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Sorted, duplicate-free list of 0-based column indices.
using IndexSet = std::vector<int>;

inline Vector cwise_min(const Vector& a, const Vector& b) { return a.cwiseMin(b); }

inline Vector positive_part(const Vector& a) { return a.cwiseMax(0.0); }

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet complement(const IndexSet& a, int n) {
  IndexSet out;
  out.reserve(n - a.size());
  auto it = a.begin();
  for (int i = 0; i < n; ++i) {
    if (it != a.end() && *it == i) {
      ++it;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace pipm
