#include "pshadow/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace pshadow {

int max_supported_size() {
  if (const char* env = std::getenv("SHADOW_MAX_N")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 10);
  }
  return kDefaultMaxSize;
}

void require_supported_size(int n, const char* what) {
  const int limit = max_supported_size();
  if (n < 1 || n > limit) {
    throw UnsupportedSize(std::string(what) + ": size " + std::to_string(n) +
                          " outside supported range [1, " + std::to_string(limit) + "]");
  }
}

SkewIntMatrix::SkewIntMatrix(IntMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("skew matrix must be square");
  if (m_ != -m_.transpose()) throw InvalidArgument("matrix is not skew-symmetric");
}

SkewIntMatrix SkewIntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw InvalidArgument("row " + std::to_string(i) + " has wrong length");
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return SkewIntMatrix(std::move(m));
}

bool SkewIntMatrix::in_range(Int bound) const {
  return m_.size() == 0 || m_.cwiseAbs().maxCoeff() <= bound;
}

std::vector<Int> SkewIntMatrix::entries() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(m_.size()));
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
  return out;
}

bool operator<(const SkewIntMatrix& a, const SkewIntMatrix& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("mapping is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> m(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) m[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(m));
}

int rank(const IntMatrix& m) {
  IntMatrix a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Int prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        // Bareiss step: the division is exact.
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

bool is_singular(const SkewIntMatrix& a) {
  if (a.size() % 2 == 1) return true;
  return rank(a.matrix()) < a.size();
}

Int content(const IntVector& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g;
}

IntVector primitive(IntVector v) {
  const Int g = content(v);
  if (g == 0) return v;
  v /= g;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

std::vector<IntVector> rational_kernel_basis(const IntMatrix& m) {
  // Integer row echelon form with gcd-reduced rows, then one kernel vector
  // per free column by back substitution over the pivots.
  IntMatrix a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Int f = a(i, c);
      const Int p = a(r, c);
      a.row(i) = (p * a.row(i) - f * a.row(r)).eval();
      const Int g = content(a.row(i).transpose());
      if (g > 1) a.row(i) /= g;
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  // Reduced form: row k has pivot a(k, pivot_cols[k]) and zeros in every
  // other pivot column, so x_free = L and x_pivot = -a(k, free) * L / pivot.
  Int lcm = 1;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    lcm = std::lcm(lcm, std::abs(a(static_cast<Eigen::Index>(k), pivot_cols[k])));
  }

  std::vector<IntVector> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    IntVector x = IntVector::Zero(cols);
    x(f) = lcm;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      const auto row = static_cast<Eigen::Index>(k);
      const Int p = a(row, pivot_cols[k]);
      x(pivot_cols[k]) = -a(row, f) * (lcm / p);
    }
    basis.push_back(primitive(std::move(x)));
  }
  return basis;
}

IntMatrix permute(const IntMatrix& m, const Permutation& p) {
  if (p.size() != m.rows() || m.rows() != m.cols()) {
    throw InvalidArgument("permutation size does not match matrix");
  }
  const int n = p.size();
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(p(i), p(j));
  return out;
}

SkewIntMatrix permute(const SkewIntMatrix& a, const Permutation& p) {
  return SkewIntMatrix(permute(a.matrix(), p));
}

namespace detail {
namespace {

struct CanonSearch {
  int n;
  const signed char* in;
  signed char* best;
  int* best_perm;
  bool have_best = false;
  int perm[16] = {};
  bool used[16] = {};

  // Compares the full row-major sequence under `perm` with the incumbent.
  // Returns <0, 0, >0.
  int compare_full() const {
    for (int i = 0; i < n; ++i) {
      const signed char* row = in + perm[i] * n;
      const signed char* brow = best + i * n;
      for (int j = 0; j < n; ++j) {
        const signed char v = row[perm[j]];
        if (v != brow[j]) return v < brow[j] ? -1 : 1;
      }
    }
    return 0;
  }

  void store() {
    for (int i = 0; i < n; ++i) {
      const signed char* row = in + perm[i] * n;
      for (int j = 0; j < n; ++j) best[i * n + j] = row[perm[j]];
      best_perm[i] = perm[i];
    }
    have_best = true;
  }

  void extend(int depth) {
    if (depth == n) {
      // Strictly smaller only: mappings are visited in lexicographic order,
      // so the first minimizer found is the least one.
      if (!have_best || compare_full() < 0) store();
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      perm[depth] = v;
      if (have_best) {
        // Row 0 is known up to column `depth` once perm[0..depth] is fixed.
        const signed char* row0 = in + perm[0] * n;
        int cmp = 0;
        for (int j = 0; j <= depth && cmp == 0; ++j) {
          const signed char x = row0[perm[j]];
          if (x != best[j]) cmp = x < best[j] ? -1 : 1;
        }
        if (cmp > 0) continue;
        // A strictly smaller prefix beats the incumbent whatever follows.
        if (cmp < 0) have_best = false;
      }
      used[v] = true;
      extend(depth + 1);
      used[v] = false;
    }
  }

};

}  // namespace

void canonical_sequence(int n, const signed char* in, signed char* out, int* perm) {
  CanonSearch s{n, in, out, perm};
  s.extend(0);
}

}  // namespace detail

CanonicalForm canonical_form(const SkewIntMatrix& a) {
  const int n = a.size();
  require_supported_size(n, "canonical_form");
  std::vector<signed char> in(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int v = a(i, j);
      if (v < -127 || v > 127) throw InvalidArgument("canonical_form: entry out of range");
      in[static_cast<std::size_t>(i * n + j)] = static_cast<signed char>(v);
    }
  std::vector<signed char> out(in.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  detail::canonical_sequence(n, in.data(), out.data(), perm.data());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = out[static_cast<std::size_t>(i * n + j)];
  return {SkewIntMatrix(std::move(m)), Permutation(std::move(perm))};
}

}  // namespace pshadow
