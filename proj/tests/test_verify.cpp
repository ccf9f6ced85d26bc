#include <doctest.h>

#include "pshadow/linalg.hpp"
#include "pshadow/reconstruct.hpp"
#include "pshadow/verify.hpp"
#include "support.hpp"

using namespace pshadow;
using testing::from_arrows;
using testing::rows;
using testing::triangle;

TEST_CASE("cartan identity") {
  const Quiver cycle = from_arrows(3, {{0, 1}, {1, 2}, {2, 0}});
  SUBCASE("zero adjacency passes with any valid c") {
    const auto r = cartan_identity_check(from_arrows(2, {{0, 1}, {1, 0}}), rows({{2, 1}, {1, 3}}));
    CHECK(r.passed());
  }
  SUBCASE("3-cycle with all-ones passes") { CHECK(cartan_identity_check(cycle, IntMatrix::Ones(3, 3)).passed()); }
  SUBCASE("3-cycle with identity fails and lists positions") {
    const auto r = cartan_identity_check(cycle, IntMatrix::Identity(3, 3));
    CHECK_FALSE(r.passed());
    REQUIRE(r.find("identity"));
    CHECK(r.find("identity")->detail.find("(0,1)=1") != std::string::npos);
    CHECK_FALSE(r.find("vertex-balance")->pass);
  }
  SUBCASE("invalid c is rejected before multiplying") {
    CHECK_THROWS_AS(cartan_identity_check(cycle, rows({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}})), InvalidArgument);
    CHECK_THROWS_AS(cartan_identity_check(cycle, rows({{1, -1, 0}, {-1, 1, 0}, {0, 0, 1}})), InvalidArgument);
    CHECK_THROWS_AS(cartan_identity_check(cycle, IntMatrix::Ones(2, 2)), InvalidArgument);
  }
  SUBCASE("2-cycles and loops do not disturb the identity") {
    const auto q = from_arrows(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 0}, {1, 1}});
    CHECK(cartan_identity_check(q, IntMatrix::Ones(3, 3)).passed());
  }
}

TEST_CASE("rational rank agrees with the fraction-free rank") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 7;
    const auto a = testing::random_skew(rng, n, 2);
    CHECK(rational_rank(a.matrix()) == rank(a.matrix()));
  }
  CHECK(rational_rank(rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("audit of pipeline records") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& r : enumerate_shadows(n)) {
      const auto report = audit_record(r);
      CHECK(report.passed());
      CHECK(report.find("certificate"));
      // Pure and idempotent.
      const auto again = audit_record(r);
      REQUIRE(again.checks.size() == report.checks.size());
      for (std::size_t k = 0; k < report.checks.size(); ++k) CHECK(again.checks[k].pass == report.checks[k].pass);
    }
  }
}

TEST_CASE("audit catches injected faults") {
  auto shadows = enumerate_shadows(4);
  // A record with a nonzero certificate entry to negate.
  ShadowRecord r = shadows.back();
  REQUIRE(r.certificate);
  SUBCASE("negated certificate entry") {
    auto& c = r.certificate->c;
    Eigen::Index i = 0, j = 0;
    c.maxCoeff(&i, &j);
    c(i, j) = -c(i, j);
    if (i != j) c(j, i) = -c(j, i);
    const auto report = audit_record(r);
    CHECK_FALSE(report.find("certificate")->pass);
  }
  SUBCASE("rows swapped after the fact") {
    // Swap rows 0 and 1 of a shadow that is not invariant under it.
    for (const auto& s : shadows) {
      const auto swapped = permute(s.matrix, Permutation({1, 0, 2, 3}));
      if (swapped == s.matrix) continue;
      ShadowRecord bad = s;
      bad.matrix = swapped;
      CHECK_FALSE(audit_record(bad).find("canonical")->pass);
    }
  }
  SUBCASE("wrong rank claim") {
    r.rank += 2;
    CHECK_FALSE(audit_record(r).find("rank")->pass);
  }
  SUBCASE("shadow without certificate") {
    r.certificate.reset();
    CHECK_FALSE(audit_record(r).passed());
  }
}

TEST_CASE("identity holds across legal matchings") {
  for (const auto& r : enumerate_shadows(4)) {
    const auto base = reduced_quiver(r.matrix);
    for (const auto& m : legal_matchings(r.matrix)) {
      const auto q = attach(base, m, IntVector::Zero(4));
      CHECK(cartan_identity_check(q, r.certificate->c).passed());
    }
  }
}
