#include "pshadow/cone.hpp"

#include <stdexcept>

#include "pshadow/linalg.hpp"

namespace pshadow {

namespace {

// Rank of the constraints active on both rays: the equalities already
// imposed plus x_k >= 0 for every common zero coordinate.
bool adjacent(const IntMatrix& equalities, const ConeRay& p, const ConeRay& q) {
  const Eigen::Index n = p.size();
  std::vector<Eigen::Index> zeros;
  for (Eigen::Index k = 0; k < n; ++k)
    if (p(k) == 0 && q(k) == 0) zeros.push_back(k);
  const auto eq_rows = equalities.rows();
  if (eq_rows + static_cast<Eigen::Index>(zeros.size()) < n - 2) return false;
  IntMatrix active = IntMatrix::Zero(eq_rows + static_cast<Eigen::Index>(zeros.size()), n);
  active.topRows(eq_rows) = equalities;
  for (std::size_t z = 0; z < zeros.size(); ++z) active(eq_rows + static_cast<Eigen::Index>(z), zeros[z]) = 1;
  return rank(active) == n - 2;
}

}  // namespace

std::vector<ConeRay> nonneg_kernel_rays(const IntMatrix& a) {
  const Eigen::Index n = a.cols();
  std::vector<ConeRay> rays;
  for (Eigen::Index k = 0; k < n; ++k) rays.push_back(IntVector::Unit(n, k));

  for (Eigen::Index row = 0; row < a.rows(); ++row) {
    const auto h = a.row(row);
    std::vector<Int> value(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) value[r] = h.dot(rays[r].transpose());

    const IntMatrix processed = a.topRows(row);
    std::vector<ConeRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (value[r] == 0) next.push_back(rays[r]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        if (!adjacent(processed, rays[p], rays[q])) continue;
        next.push_back(primitive(value[p] * rays[q] - value[q] * rays[p]));
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;
  }
  return rays;
}

bool certificate_valid(const IntMatrix& a, const IntMatrix& c) {
  if (c.rows() != a.rows() || c.cols() != a.cols()) return false;
  if (c != c.transpose()) return false;
  if ((c.array() < 0).any()) return false;
  for (Eigen::Index j = 0; j < c.cols(); ++j)
    if (c.col(j).isZero()) return false;
  return (a * c).isZero();
}

Ps3Decision ps3_decide(const SkewIntMatrix& a) {
  const int n = a.size();
  const auto rays = nonneg_kernel_rays(a);

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const auto& r : rays)
    for (int k = 0; k < n; ++k)
      if (r(k) > 0) covered[static_cast<std::size_t>(k)] = true;
  for (int k = 0; k < n; ++k) {
    if (!covered[static_cast<std::size_t>(k)]) return Ps3Witness{k, static_cast<int>(rays.size())};
  }

  // Greedy cover: most newly covered indices first, earliest ray on ties.
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int remaining = n;
  Ps3Certificate cert{IntMatrix::Zero(n, n), {}};
  while (remaining > 0) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      int gain = 0;
      for (int k = 0; k < n; ++k)
        if (rays[r](k) > 0 && !done[static_cast<std::size_t>(k)]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = r;
      }
    }
    const auto& ray = rays[best];
    for (int k = 0; k < n; ++k) {
      if (ray(k) > 0 && !done[static_cast<std::size_t>(k)]) {
        done[static_cast<std::size_t>(k)] = true;
        --remaining;
      }
    }
    cert.c += ray * ray.transpose();
    cert.rays_used.push_back(ray);
  }
  if (!certificate_valid(a.matrix(), cert.c)) {
    throw std::logic_error("ps3_decide: assembled certificate failed validation");
  }
  return cert;
}

namespace {

struct OracleSearch {
  const IntMatrix& a;
  Int bound;
  int n;
  IntMatrix c;
  std::vector<std::pair<int, int>> cells;  // upper triangle, row-major

  bool column_ok(int k) const {
    if (c.col(k).isZero()) return false;
    return (a * c.col(k)).isZero();
  }

  bool search(std::size_t pos) {
    if (pos == cells.size()) return true;
    const auto [i, j] = cells[pos];
    for (Int v = 0; v <= bound; ++v) {
      c(i, j) = v;
      c(j, i) = v;
      // Column i is complete once (i, n-1) is placed.
      if (j == n - 1 && !column_ok(i)) continue;
      if (search(pos + 1)) return true;
    }
    c(i, j) = 0;
    c(j, i) = 0;
    return false;
  }
};

}  // namespace

std::optional<Ps3Certificate> ps3_oracle(const SkewIntMatrix& a, Int bound) {
  const int n = a.size();
  OracleSearch s{a.matrix(), bound, n, IntMatrix::Zero(n, n), {}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.cells.emplace_back(i, j);
  if (!s.search(0)) return std::nullopt;
  return Ps3Certificate{s.c, {}};
}

}  // namespace pshadow
