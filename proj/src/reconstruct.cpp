#include "pshadow/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pshadow/linalg.hpp"

namespace pshadow {

namespace {

void extend_matchings(int v, int n, const std::vector<bool>& blocked, std::vector<bool>& used,
                      std::vector<std::pair<int, int>>& edges, std::vector<Matching>& out) {
  while (v < n && (used[static_cast<std::size_t>(v)] || blocked[static_cast<std::size_t>(v)])) ++v;
  if (v >= n) {
    out.emplace_back(edges);
    return;
  }
  // v stays unmatched
  used[static_cast<std::size_t>(v)] = true;
  extend_matchings(v + 1, n, blocked, used, edges, out);
  for (int w = v + 1; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)] || blocked[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    edges.emplace_back(v, w);
    extend_matchings(v + 1, n, blocked, used, edges, out);
    edges.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
  used[static_cast<std::size_t>(v)] = false;
}

std::vector<bool> double_arrow_vertices(const SkewIntMatrix& a) {
  const int n = a.size();
  std::vector<bool> out(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) == 2 || a(i, j) == -2) out[static_cast<std::size_t>(i)] = true;
  return out;
}

IntVector loop_vector(int n, unsigned mask) {
  IntVector l = IntVector::Zero(n);
  for (int v = 0; v < n; ++v) l(v) = (mask >> v) & 1U;
  return l;
}

// T1-T3 on the off-diagonal part of every row (and column).
bool arrow_matrix_tame(const IntMatrix& arr, bool columns) {
  const auto n = arr.rows();
  std::vector<Int> line(static_cast<std::size_t>(n));
  for (int pass = 0; pass < (columns ? 2 : 1); ++pass) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        line[static_cast<std::size_t>(j)] = (i == j) ? 0 : (pass == 0 ? arr(i, j) : arr(j, i));
      }
      if (!tame_row_ok(line)) return false;
    }
  }
  return true;
}

// No loop at a vertex that carries a double arrow.
bool loops_beside_double_arrows_ok(const IntMatrix& arr) {
  const auto n = arr.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (arr(i, i) == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i && (arr(i, j) >= 2 || arr(j, i) >= 2)) return false;
    }
  }
  return true;
}

// A single arrow i -> j must not be simultaneously the only arrow leaving i
// and the only arrow entering j (loops count as arrows at their vertex).
bool infinite_type_ok(const IntMatrix& arr) {
  const auto n = arr.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || arr(i, j) != 1) continue;
      const bool only_out = (arr.row(i).array() > 0).count() == 1;
      const bool only_in = (arr.col(j).array() > 0).count() == 1;
      if (only_out && only_in) return false;
    }
  }
  return true;
}

CandidateQuiver plain(IntMatrix arr, std::vector<std::pair<int, int>> edges) {
  IntVector loops = arr.diagonal();
  return {Quiver(std::move(arr)), std::move(edges), std::move(loops), {}};
}

void zero_shadow(int n, const ReconstructionOptions& opts,
                 const std::function<void(const CandidateQuiver&)>& sink) {
  if (n == 1) {
    for (Int loops = opts.allow_bare_vertex ? 0 : 1; loops <= 2; ++loops) {
      if (!opts.include_loops && loops > 0) break;
      sink(plain(IntMatrix::Constant(1, 1, loops), {}));
    }
    return;
  }
  if (n == 2) {
    IntMatrix arr(2, 2);
    arr << 0, 2, 2, 0;
    sink(plain(arr, {{0, 1}, {0, 1}}));
    arr << 0, 1, 1, 0;
    sink(plain(arr, {{0, 1}}));
    if (!opts.include_loops) return;
    arr << 1, 1, 1, 1;
    sink(plain(arr, {{0, 1}}));
    arr << 1, 1, 1, 0;
    sink(plain(arr, {{0, 1}}));
    return;
  }
  if (n == 3) {
    IntMatrix arr = IntMatrix::Ones(3, 3);
    arr.diagonal().setZero();
    sink(plain(arr, {{0, 1}, {0, 2}, {1, 2}}));
    // Double path 0 - 1 - 2, loops allowed at the two ends.
    for (unsigned mask : {0U, 1U, 4U, 5U}) {
      if (!opts.include_loops && mask != 0) continue;
      IntMatrix path = IntMatrix::Zero(3, 3);
      path(0, 1) = path(1, 0) = path(1, 2) = path(2, 1) = 1;
      path.diagonal() = loop_vector(3, mask);
      sink(plain(path, {{0, 1}, {1, 2}}));
    }
  }
  // Zero shadows with n >= 4 have no candidates.
}

}  // namespace

std::vector<Matching> legal_matchings(const SkewIntMatrix& a) {
  const int n = a.size();
  const auto blocked = double_arrow_vertices(a);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::pair<int, int>> edges;
  std::vector<Matching> out;
  extend_matchings(0, n, blocked, used, edges, out);
  std::sort(out.begin(), out.end(), [](const Matching& x, const Matching& y) {
    return x.edges() < y.edges();
  });
  return out;
}

void reconstruct(const SkewIntMatrix& a, const ReconstructionOptions& opts,
                 const std::function<void(const CandidateQuiver&)>& sink) {
  if (auto failed = shadow_violation(a)) {
    throw InvalidArgument("input is not a tame periodicity shadow: fails " + *failed);
  }
  const int n = a.size();
  if (a.is_zero()) {
    zero_shadow(n, opts, sink);
    return;
  }
  if (n > 16) throw UnsupportedSize("reconstruct: loop subsets beyond 16 vertices");

  const Quiver base = reduced_quiver(a);
  const unsigned masks = opts.include_loops ? (1U << n) : 1U;
  for (const auto& matching : legal_matchings(a)) {
    for (unsigned mask = 0; mask < masks; ++mask) {
      const IntVector loops = loop_vector(n, mask);
      Quiver q = attach(base, matching, loops);
      const auto& arr = q.arr();
      if (!arrow_matrix_tame(arr, opts.arr_checks_on_columns)) continue;
      if (!loops_beside_double_arrows_ok(arr)) continue;
      if (opts.infinite_type && !infinite_type_ok(arr)) continue;
      std::vector<BlockMatch> blocks;
      bool all_blocks = true;
      for (const auto& [i, j] : matching.edges()) {
        auto b = block_classify(q, i, j);
        if (!b) {
          all_blocks = false;
          break;
        }
        blocks.push_back(std::move(*b));
      }
      if (!all_blocks) continue;
      sink(CandidateQuiver{std::move(q), matching.edges(), loops, std::move(blocks)});
    }
  }
}

std::vector<CandidateQuiver> reconstruct(const SkewIntMatrix& a, const ReconstructionOptions& opts) {
  std::vector<CandidateQuiver> out;
  reconstruct(a, opts, [&](const CandidateQuiver& c) { out.push_back(c); });
  return out;
}

std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<CandidateQuiver>& candidates) {
  // Brute-force canonical arrow matrix: least row-major image over all
  // relabelings.
  auto canon = [](const IntMatrix& arr) {
    const int n = static_cast<int>(arr.rows());
    require_supported_size(n, "isomorphism_classes");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Int> best;
    do {
      std::vector<Int> seq;
      seq.reserve(static_cast<std::size_t>(n * n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) seq.push_back(arr(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]));
      if (best.empty() || seq < best) best = std::move(seq);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  };
  std::map<std::vector<Int>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    auto key = canon(candidates[k].quiver.arr());
    auto [it, inserted] = index.emplace(std::move(key), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

}  // namespace pshadow
