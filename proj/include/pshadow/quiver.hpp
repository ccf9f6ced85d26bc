#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pshadow/matrix.hpp"

namespace pshadow {

/// A finite quiver given by its arrow-count matrix: arr(i, j) arrows i -> j,
/// arr(i, i) loops at i.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(IntMatrix arr);

  static Quiver empty(int n) { return Quiver(IntMatrix::Zero(n, n)); }

  int size() const { return static_cast<int>(arr_.rows()); }
  Int arrows(int from, int to) const { return arr_(from, to); }
  Int loops(int v) const { return arr_(v, v); }
  const IntMatrix& arr() const { return arr_; }

  /// Off-diagonal arrows leaving / entering v, with multiplicity.
  Int out_degree(int v) const;
  Int in_degree(int v) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.arr_.rows() == b.arr_.rows() && a.arr_ == b.arr_;
  }

 private:
  IntMatrix arr_;
};

/// Tame-range sanity for a quiver: at most two arrows between any ordered
/// pair, at most one loop per vertex when there is more than one vertex.
/// Returns a description of the first violation.
std::optional<std::string> tame_quiver_violation(const Quiver& q);

/// Pairwise disjoint unordered vertex pairs, stored as (min, max) in
/// lexicographic order.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> edges);

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  bool covers(int v) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<std::pair<int, int>> edges_;
};

/// Arr_Q - Arr_Q^T; loops are invisible.
SkewIntMatrix signed_adjacency(const Quiver& q);

/// The quiver with arrow matrix max(a, 0): no loops, no 2-cycles.
Quiver reduced_quiver(const SkewIntMatrix& a);

struct StrippedQuiver {
  Quiver reduced;        // what is left after removing loops and 2-cycles
  Quiver matching_part;  // the removed 2-cycles, symmetric
  IntVector loops;
};

/// Splits q into reduced part, 2-cycle overlay and loops so that
/// q.arr() == reduced.arr() + matching_part.arr() + diag(loops).
StrippedQuiver strip(const Quiver& q);

/// Quiver with arrow matrix base.arr() plus a 2-cycle for every matching
/// edge plus the given loops.
Quiver attach(const Quiver& base, const Matching& m, const IntVector& loops);

enum class BlockKind { PendantPair, Square, Mixed32, FullSpindle };

std::string_view to_string(BlockKind k);
std::optional<BlockKind> block_kind_from_string(std::string_view s);

/// A 2-cycle placed inside one of the four admissible block shapes.
struct BlockMatch {
  std::pair<int, int> pair;
  BlockKind kind = BlockKind::PendantPair;
  /// Template vertex name -> quiver vertex, in template order.
  std::vector<std::pair<std::string, int>> roles;
  /// Internal vertices; every arrow at one of them belongs to the block.
  std::vector<int> black;
  /// Glueing vertices; arrows outside the block may attach here.
  std::vector<int> outlets;
  /// Arrows of the block as (from, to), loops as (v, v), with multiplicity.
  std::vector<std::pair<int, int>> arrows;

  int role(std::string_view name) const;
};

/// Classifies the 2-cycle {i, j} of q. Templates are tried in the order
/// PendantPair, Square, Mixed32, FullSpindle and the first match wins.
/// Throws InvalidArgument if q has no arrows both ways between i and j.
std::optional<BlockMatch> block_classify(const Quiver& q, int i, int j);

/// All unordered pairs carrying arrows in both directions.
std::vector<std::pair<int, int>> two_cycles(const Quiver& q);

}  // namespace pshadow
