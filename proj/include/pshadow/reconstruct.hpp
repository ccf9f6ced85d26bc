#pragma once

#include <functional>
#include <vector>

#include "pshadow/enumerate.hpp"
#include "pshadow/quiver.hpp"

namespace pshadow {

struct ReconstructionOptions {
  /// Enforce the representation-infinite arrow rule: no single arrow i -> j
  /// that is both the only arrow leaving i and the only arrow entering j.
  bool infinite_type = true;
  /// Apply T1-T3 to the columns of the arrow matrix as well as its rows.
  bool arr_checks_on_columns = true;
  bool include_loops = true;
  /// Also emit the loop-free single vertex for n = 1.
  bool allow_bare_vertex = false;
};

struct CandidateQuiver {
  Quiver quiver;
  /// 2-cycles attached to the reduced quiver. For the zero-shadow quivers
  /// with n <= 3 this is the full edge list of the doubled graph.
  std::vector<std::pair<int, int>> matching;
  IntVector loops;
  std::vector<BlockMatch> blocks;
};

/// Matchings on {0..n-1} avoiding every endpoint of a +-2 entry, including
/// the empty one, in lexicographic order of their sorted edge lists.
std::vector<Matching> legal_matchings(const SkewIntMatrix& a);

/// Candidate Gabriel quivers with signed adjacency `a`. Throws
/// InvalidArgument naming the first failed predicate when `a` is not a tame
/// periodicity shadow.
std::vector<CandidateQuiver> reconstruct(const SkewIntMatrix& a, const ReconstructionOptions& opts = {});
void reconstruct(const SkewIntMatrix& a, const ReconstructionOptions& opts,
                 const std::function<void(const CandidateQuiver&)>& sink);

/// Groups labeled candidates into isomorphism classes of their arrow
/// matrices; returns one index list per class, ordered by first member.
std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<CandidateQuiver>& candidates);

}  // namespace pshadow
