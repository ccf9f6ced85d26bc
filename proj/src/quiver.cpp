#include "pshadow/quiver.hpp"

#include <algorithm>
#include <set>

namespace pshadow {

Quiver::Quiver(IntMatrix arr) : arr_(std::move(arr)) {
  if (arr_.rows() != arr_.cols()) throw InvalidArgument("arrow matrix must be square");
  if ((arr_.array() < 0).any()) throw InvalidArgument("arrow counts must be nonnegative");
}

Int Quiver::out_degree(int v) const { return arr_.row(v).sum() - arr_(v, v); }
Int Quiver::in_degree(int v) const { return arr_.col(v).sum() - arr_(v, v); }

std::optional<std::string> tame_quiver_violation(const Quiver& q) {
  const int n = q.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && q.arrows(i, j) > 2) {
        return "more than two arrows " + std::to_string(i) + "->" + std::to_string(j);
      }
    }
    if (n > 1 && q.loops(i) > 1) return "more than one loop at " + std::to_string(i);
  }
  return std::nullopt;
}

Matching::Matching(std::vector<std::pair<int, int>> edges) : edges_(std::move(edges)) {
  std::set<int> used;
  for (auto& [a, b] : edges_) {
    if (a == b) throw InvalidArgument("matching edge joins a vertex to itself");
    if (a > b) std::swap(a, b);
    if (!used.insert(a).second || !used.insert(b).second) {
      throw InvalidArgument("matching edges share a vertex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Matching::covers(int v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [v](const auto& e) { return e.first == v || e.second == v; });
}

SkewIntMatrix signed_adjacency(const Quiver& q) {
  return SkewIntMatrix(q.arr() - q.arr().transpose());
}

Quiver reduced_quiver(const SkewIntMatrix& a) {
  return Quiver(a.matrix().cwiseMax(Int{0}));
}

StrippedQuiver strip(const Quiver& q) {
  IntMatrix overlay = q.arr().cwiseMin(q.arr().transpose());
  overlay.diagonal().setZero();
  IntMatrix rest = q.arr() - overlay;
  IntVector loops = q.arr().diagonal();
  rest.diagonal().setZero();
  return {Quiver(std::move(rest)), Quiver(std::move(overlay)), std::move(loops)};
}

Quiver attach(const Quiver& base, const Matching& m, const IntVector& loops) {
  IntMatrix arr = base.arr();
  for (const auto& [a, b] : m.edges()) {
    arr(a, b) += 1;
    arr(b, a) += 1;
  }
  arr.diagonal() += loops;
  return Quiver(std::move(arr));
}

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::PendantPair: return "PendantPair";
    case BlockKind::Square: return "Square";
    case BlockKind::Mixed32: return "Mixed32";
    case BlockKind::FullSpindle: return "FullSpindle";
  }
  return "?";
}

std::optional<BlockKind> block_kind_from_string(std::string_view s) {
  for (auto k : {BlockKind::PendantPair, BlockKind::Square, BlockKind::Mixed32, BlockKind::FullSpindle})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

int BlockMatch::role(std::string_view name) const {
  for (const auto& [r, v] : roles)
    if (r == name) return v;
  throw InvalidArgument("block has no role " + std::string(name));
}

std::vector<std::pair<int, int>> two_cycles(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < q.size(); ++i)
    for (int j = i + 1; j < q.size(); ++j)
      if (q.arrows(i, j) > 0 && q.arrows(j, i) > 0) out.emplace_back(i, j);
  return out;
}

namespace {

// Off-diagonal neighbours of v in one direction, each with its count.
std::vector<std::pair<int, Int>> out_neighbours(const Quiver& q, int v) {
  std::vector<std::pair<int, Int>> out;
  for (int k = 0; k < q.size(); ++k)
    if (k != v && q.arrows(v, k) > 0) out.emplace_back(k, q.arrows(v, k));
  return out;
}
std::vector<std::pair<int, Int>> in_neighbours(const Quiver& q, int v) {
  std::vector<std::pair<int, Int>> out;
  for (int k = 0; k < q.size(); ++k)
    if (k != v && q.arrows(k, v) > 0) out.emplace_back(k, q.arrows(k, v));
  return out;
}

// Single arrows from v to every vertex except `skip`; empty optional if any
// neighbour carries a multiple arrow.
std::optional<std::vector<int>> simple_targets(const std::vector<std::pair<int, Int>>& nb, int skip) {
  std::vector<int> out;
  for (const auto& [k, c] : nb) {
    if (k == skip) continue;
    if (c != 1) return std::nullopt;
    out.push_back(k);
  }
  return out;
}

bool only_arrow_pair(const Quiver& q, int v, int from, int to) {
  // v has exactly one incoming arrow (from `from`) and one outgoing (to `to`).
  return q.loops(v) == 0 && q.in_degree(v) == 1 && q.out_degree(v) == 1 &&
         q.arrows(from, v) == 1 && q.arrows(v, to) == 1;
}

std::optional<BlockMatch> pendant_pair(const Quiver& q, int black, int white) {
  if (q.arrows(black, white) != 1 || q.arrows(white, black) != 1) return std::nullopt;
  if (q.loops(black) > 1) return std::nullopt;
  if (q.out_degree(black) != 1 || q.in_degree(black) != 1) return std::nullopt;
  BlockMatch m;
  m.pair = {std::min(black, white), std::max(black, white)};
  m.kind = BlockKind::PendantPair;
  m.roles = {{"black", black}, {"outlet", white}};
  m.black = {black};
  m.outlets = {white};
  m.arrows = {{black, white}, {white, black}};
  if (q.loops(black) == 1) m.arrows.emplace_back(black, black);
  return m;
}

std::optional<BlockMatch> square(const Quiver& q, int i, int j) {
  if (q.arrows(i, j) != 1 || q.arrows(j, i) != 1) return std::nullopt;
  if (q.loops(i) != 0 || q.loops(j) != 0) return std::nullopt;
  for (int v : {i, j})
    if (q.out_degree(v) != 2 || q.in_degree(v) != 2) return std::nullopt;
  const auto outs = simple_targets(out_neighbours(q, i), j);
  const auto ins = simple_targets(in_neighbours(q, i), j);
  if (!outs || !ins || outs->size() != 1 || ins->size() != 1) return std::nullopt;
  const int r = outs->front();
  const int l = ins->front();
  if (l == r) return std::nullopt;
  if (q.arrows(r, j) != 1 || q.arrows(j, l) != 1) return std::nullopt;
  BlockMatch m;
  m.pair = {std::min(i, j), std::max(i, j)};
  m.kind = BlockKind::Square;
  m.roles = {{"top", i}, {"bottom", j}, {"left", l}, {"right", r}};
  m.black = {i, j};
  m.outlets = {std::min(l, r), std::max(l, r)};
  m.arrows = {{i, j}, {j, i}, {l, i}, {i, r}, {r, j}, {j, l}};
  return m;
}

// i is the vertex with two arrows into the black 1-vertices.
std::optional<BlockMatch> mixed32(const Quiver& q, int i, int j) {
  if (q.arrows(i, j) != 1 || q.arrows(j, i) != 1) return std::nullopt;
  if (q.loops(i) != 0 || q.loops(j) != 0) return std::nullopt;
  const auto a = simple_targets(out_neighbours(q, i), j);
  const auto w_in = simple_targets(in_neighbours(q, i), j);
  const auto a_in = simple_targets(in_neighbours(q, j), i);
  const auto w_out = simple_targets(out_neighbours(q, j), i);
  if (!a || !w_in || !a_in || !w_out) return std::nullopt;
  if (a->size() != 2 || w_in->size() != 1 || w_out->size() != 1) return std::nullopt;
  if (*a != *a_in) return std::nullopt;
  const int w = w_in->front();
  if (w_out->front() != w) return std::nullopt;
  const int a1 = (*a)[0], a2 = (*a)[1];
  if (w == a1 || w == a2) return std::nullopt;
  if (!only_arrow_pair(q, a1, i, j) || !only_arrow_pair(q, a2, i, j)) return std::nullopt;
  BlockMatch m;
  m.pair = {std::min(i, j), std::max(i, j)};
  m.kind = BlockKind::Mixed32;
  m.roles = {{"source", i}, {"sink", j}, {"a1", a1}, {"a2", a2}, {"outlet", w}};
  m.black = {i, j, a1, a2};
  std::sort(m.black.begin(), m.black.end());
  m.outlets = {w};
  m.arrows = {{i, j}, {j, i}, {i, a1}, {i, a2}, {a1, j}, {a2, j}, {j, w}, {w, i}};
  return m;
}

std::optional<BlockMatch> full_spindle(const Quiver& q, int i, int j) {
  if (q.size() != 6) return std::nullopt;
  if (q.arrows(i, j) != 1 || q.arrows(j, i) != 1) return std::nullopt;
  if (!q.arr().diagonal().isZero()) return std::nullopt;
  const auto a = simple_targets(out_neighbours(q, i), j);
  const auto a_in = simple_targets(in_neighbours(q, j), i);
  const auto b = simple_targets(out_neighbours(q, j), i);
  const auto b_in = simple_targets(in_neighbours(q, i), j);
  if (!a || !a_in || !b || !b_in) return std::nullopt;
  if (a->size() != 2 || b->size() != 2 || *a != *a_in || *b != *b_in) return std::nullopt;
  std::set<int> distinct{i, j, (*a)[0], (*a)[1], (*b)[0], (*b)[1]};
  if (distinct.size() != 6) return std::nullopt;
  for (int v : *a)
    if (!only_arrow_pair(q, v, i, j)) return std::nullopt;
  for (int v : *b)
    if (!only_arrow_pair(q, v, j, i)) return std::nullopt;
  if (q.arr().sum() != 10) return std::nullopt;
  BlockMatch m;
  m.pair = {std::min(i, j), std::max(i, j)};
  m.kind = BlockKind::FullSpindle;
  m.roles = {{"left", i}, {"right", j}, {"a1", (*a)[0]}, {"a2", (*a)[1]}, {"b1", (*b)[0]}, {"b2", (*b)[1]}};
  m.black = {distinct.begin(), distinct.end()};
  m.arrows = {{i, j}, {j, i}};
  for (int v : *a) {
    m.arrows.emplace_back(i, v);
    m.arrows.emplace_back(v, j);
  }
  for (int v : *b) {
    m.arrows.emplace_back(j, v);
    m.arrows.emplace_back(v, i);
  }
  return m;
}

}  // namespace

std::optional<BlockMatch> block_classify(const Quiver& q, int i, int j) {
  if (i < 0 || j < 0 || i >= q.size() || j >= q.size() || i == j ||
      q.arrows(i, j) == 0 || q.arrows(j, i) == 0) {
    throw InvalidArgument("pair {" + std::to_string(i) + "," + std::to_string(j) + "} is not a 2-cycle");
  }
  if (i > j) std::swap(i, j);
  // When both endpoints are pendant, the one carrying the loop is black.
  const bool j_first = q.loops(j) > q.loops(i);
  if (auto m = pendant_pair(q, j_first ? j : i, j_first ? i : j)) return m;
  if (auto m = pendant_pair(q, j_first ? i : j, j_first ? j : i)) return m;
  if (auto m = square(q, i, j)) return m;
  if (auto m = mixed32(q, i, j)) return m;
  if (auto m = mixed32(q, j, i)) return m;
  return full_spindle(q, i, j);
}

}  // namespace pshadow
