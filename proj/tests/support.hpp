#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pshadow/matrix.hpp"
#include "pshadow/quiver.hpp"

namespace testing {

using pshadow::Int;
using pshadow::IntMatrix;
using pshadow::Permutation;
using pshadow::Quiver;
using pshadow::SkewIntMatrix;

inline SkewIntMatrix triangle() { return SkewIntMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }
inline SkewIntMatrix unit_pair() { return SkewIntMatrix::from_rows({{0, 1}, {-1, 0}}); }

inline IntMatrix rows(const std::vector<std::vector<Int>>& r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

inline Quiver quiver(const std::vector<std::vector<Int>>& r) { return Quiver(rows(r)); }

/// Quiver on n vertices from an arrow list; loops as (v, v).
inline Quiver from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (auto [a, b] : arrows) m(a, b) += 1;
  return Quiver(m);
}

inline SkewIntMatrix random_skew(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return SkewIntMatrix(m);
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

}  // namespace testing
