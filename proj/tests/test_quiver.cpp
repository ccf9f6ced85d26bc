#include <doctest.h>

#include <map>

#include "block_fixtures.hpp"
#include "pshadow/linalg.hpp"
#include "pshadow/quiver.hpp"

using namespace pshadow;
using testing::from_arrows;
using testing::quiver;
using testing::rows;
using testing::triangle;

namespace {

// Every arrow at a black vertex, counted with multiplicity, must be one of
// the block's arrows.
bool black_arrows_inside(const Quiver& q, const BlockMatch& m) {
  std::map<std::pair<int, int>, Int> inside;
  for (const auto& e : m.arrows) ++inside[e];
  for (int b : m.black) {
    for (int v = 0; v < q.size(); ++v) {
      if (q.arrows(b, v) > inside[{b, v}]) return false;
      if (v != b && q.arrows(v, b) > inside[{v, b}]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver(rows({{0, -1}, {0, 0}})), InvalidArgument);
  CHECK_THROWS_AS(Quiver(IntMatrix::Zero(2, 3)), InvalidArgument);
  const auto q = quiver({{1, 2}, {1, 0}});
  CHECK(q.loops(0) == 1);
  CHECK(q.out_degree(0) == 2);
  CHECK(q.in_degree(0) == 1);
  CHECK_FALSE(tame_quiver_violation(q));
  CHECK(tame_quiver_violation(quiver({{0, 3}, {0, 0}})));
  CHECK(tame_quiver_violation(quiver({{2, 1}, {1, 0}})));
  CHECK_FALSE(tame_quiver_violation(quiver({{2}})));
}

TEST_CASE("matching") {
  const Matching m({{3, 1}, {0, 2}});
  CHECK(m.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(m.covers(3));
  CHECK_FALSE(m.covers(4));
  CHECK_THROWS_AS(Matching({{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Matching({{1, 1}}), InvalidArgument);
}

TEST_CASE("signed adjacency") {
  CHECK(signed_adjacency(from_arrows(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}})).is_zero());
  CHECK(signed_adjacency(from_arrows(3, {{0, 1}, {1, 2}, {2, 0}})) == triangle());
  CHECK(signed_adjacency(from_arrows(1, {{0, 0}})).is_zero());
}

TEST_CASE("reduced quiver") {
  CHECK(reduced_quiver(SkewIntMatrix::zero(3)) == Quiver::empty(3));
  CHECK(reduced_quiver(triangle()) == from_arrows(3, {{0, 1}, {1, 2}, {2, 0}}));
  const auto a = SkewIntMatrix::from_rows({{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}});
  const auto q = reduced_quiver(a);
  CHECK(q.arrows(0, 1) == 2);
  CHECK(q.arrows(1, 0) == 0);
  CHECK(signed_adjacency(q) == a);
}

TEST_CASE("strip") {
  SUBCASE("plain 2-cycle") {
    const auto s = strip(from_arrows(2, {{0, 1}, {1, 0}}));
    CHECK(s.reduced == Quiver::empty(2));
    CHECK(s.matching_part == from_arrows(2, {{0, 1}, {1, 0}}));
    CHECK(s.loops.isZero());
  }
  SUBCASE("3-cycle with a loop") {
    const auto s = strip(from_arrows(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}}));
    CHECK(s.reduced == from_arrows(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(s.matching_part == Quiver::empty(3));
    CHECK(s.loops == IntVector::Unit(3, 1));
  }
  SUBCASE("double path with end loops") {
    const auto q = from_arrows(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 0}, {2, 2}});
    const auto s = strip(q);
    CHECK(s.reduced == Quiver::empty(3));
    CHECK(s.matching_part == from_arrows(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
    IntVector loops(3);
    loops << 1, 0, 1;
    CHECK(s.loops == loops);
  }
  SUBCASE("attach undoes strip") {
    const auto q = from_arrows(4, {{0, 1}, {0, 1}, {1, 0}, {2, 3}, {3, 3}});
    const auto s = strip(q);
    CHECK(attach(s.reduced, Matching({{0, 1}}), s.loops) == q);
  }
}

TEST_CASE("accepted block instances") {
  for (const auto& f : testing::accepted_blocks()) {
    CAPTURE(f.name);
    const auto m = block_classify(f.quiver, f.pair.first, f.pair.second);
    REQUIRE(m);
    CHECK(m->kind == f.kind);
    CHECK(black_arrows_inside(f.quiver, *m));
  }
}

TEST_CASE("rejected near-misses") {
  const auto rejects = testing::rejected_blocks();
  CHECK(rejects.size() >= 20);
  for (const auto& f : rejects) {
    CAPTURE(f.name);
    CHECK_FALSE(block_classify(f.quiver, f.pair.first, f.pair.second));
  }
}

TEST_CASE("block roles") {
  SUBCASE("two-vertex pendant pair: the looped vertex is black") {
    const auto m = block_classify(from_arrows(2, {{0, 1}, {1, 0}, {1, 1}}), 0, 1);
    REQUIRE(m);
    CHECK(m->role("black") == 1);
    CHECK(m->outlets == std::vector<int>{0});
  }
  SUBCASE("square") {
    const auto m = block_classify(from_arrows(4, testing::square_base()), 1, 0);
    REQUIRE(m);
    CHECK(m->role("left") == 2);
    CHECK(m->role("right") == 3);
    CHECK(m->outlets == std::vector<int>{2, 3});
    CHECK_THROWS_AS(m->role("apex"), InvalidArgument);
  }
  SUBCASE("spindle has no outlets") {
    const auto m = block_classify(from_arrows(6, testing::spindle_base()), 0, 1);
    REQUIRE(m);
    CHECK(m->outlets.empty());
    CHECK(m->black.size() == 6);
  }
  SUBCASE("extra out-arrow at the would-be black vertex") {
    CHECK_FALSE(block_classify(from_arrows(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}, {2, 1}}), 0, 1));
  }
}

TEST_CASE("classify requires a 2-cycle") {
  CHECK_THROWS_AS(block_classify(from_arrows(2, {{0, 1}}), 0, 1), InvalidArgument);
  CHECK_THROWS_AS(block_classify(from_arrows(2, {{0, 1}, {1, 0}}), 0, 0), InvalidArgument);
  CHECK_THROWS_AS(block_classify(from_arrows(2, {{0, 1}, {1, 0}}), 0, 2), InvalidArgument);
}

TEST_CASE("classification transports along relabelings") {
  std::mt19937_64 rng(7);
  for (const auto& f : testing::accepted_blocks()) {
    CAPTURE(f.name);
    const int n = f.quiver.size();
    for (int round = 0; round < 10; ++round) {
      const auto p = testing::random_permutation(rng, n);
      const auto inv = p.inverse();
      // Vertex v of the relabeled quiver is vertex p(v) of the original.
      const Quiver moved(permute(f.quiver.arr(), p));
      const auto m = block_classify(moved, inv(f.pair.first), inv(f.pair.second));
      REQUIRE(m);
      CHECK(m->kind == f.kind);
      CHECK(black_arrows_inside(moved, *m));
    }
  }
}

TEST_CASE("two_cycles and kind names") {
  CHECK(two_cycles(from_arrows(3, {{0, 1}, {1, 0}, {1, 2}})) == std::vector<std::pair<int, int>>{{0, 1}});
  for (auto k : {BlockKind::PendantPair, BlockKind::Square, BlockKind::Mixed32, BlockKind::FullSpindle})
    CHECK(block_kind_from_string(to_string(k)) == k);
  CHECK_FALSE(block_kind_from_string("Triangle"));
}
