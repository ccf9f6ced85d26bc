#include <doctest.h>

#include "pshadow/cone.hpp"
#include "pshadow/linalg.hpp"
#include "support.hpp"

using namespace pshadow;
using testing::rows;
using testing::triangle;
using testing::unit_pair;

namespace {

void check_rays(const SkewIntMatrix& a, const std::vector<ConeRay>& rays) {
  for (const auto& r : rays) {
    CHECK((a.matrix() * r).isZero());
    CHECK((r.array() >= 0).all());
    CHECK_FALSE(r.isZero());
    CHECK(content(r) == 1);
  }
}

}  // namespace

TEST_CASE("rays of the zero matrix are the unit vectors") {
  const auto rays = nonneg_kernel_rays(SkewIntMatrix::zero(4));
  REQUIRE(rays.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(rays[static_cast<std::size_t>(k)] == IntVector::Unit(4, k));
}

TEST_CASE("nonsingular pair has no rays") { CHECK(nonneg_kernel_rays(unit_pair()).empty()); }

TEST_CASE("triangle cone is the all-ones ray") {
  const auto rays = nonneg_kernel_rays(triangle());
  REQUIRE(rays.size() == 1);
  CHECK(rays[0] == IntVector::Ones(3));
}

TEST_CASE("kernel with no positive direction") {
  const auto a = SkewIntMatrix::from_rows({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
  // Kernel is spanned by (1, -1, 1).
  CHECK(nonneg_kernel_rays(a).empty());
  const auto d = ps3_decide(a);
  REQUIRE_FALSE(is_feasible(d));
  CHECK(std::get<Ps3Witness>(d).missing_index == 0);
}

TEST_CASE("triangle plus an isolated vertex has two rays") {
  const auto a = SkewIntMatrix::from_rows({{0, 1, -1, 0}, {-1, 0, 1, 0}, {1, -1, 0, 0}, {0, 0, 0, 0}});
  const auto rays = nonneg_kernel_rays(a);
  check_rays(a, rays);
  CHECK(rays.size() == 2);
}

TEST_CASE("decide: zero matrix gives the identity") {
  const auto d = ps3_decide(SkewIntMatrix::zero(3));
  REQUIRE(is_feasible(d));
  CHECK(std::get<Ps3Certificate>(d).c == IntMatrix::Identity(3, 3));
}

TEST_CASE("decide: triangle gives the all-ones matrix") {
  const auto d = ps3_decide(triangle());
  REQUIRE(is_feasible(d));
  const auto& cert = std::get<Ps3Certificate>(d);
  CHECK(cert.c == IntMatrix::Ones(3, 3));
  REQUIRE(cert.rays_used.size() == 1);
  CHECK(certificate_valid(triangle().matrix(), cert.c));
}

TEST_CASE("decide: nonsingular pair is refuted at index 0") {
  const auto d = ps3_decide(unit_pair());
  REQUIRE_FALSE(is_feasible(d));
  CHECK(std::get<Ps3Witness>(d).missing_index == 0);
  CHECK(std::get<Ps3Witness>(d).ray_count == 0);
}

TEST_CASE("certificate_valid rejects each broken property") {
  const auto a = triangle().matrix();
  CHECK(certificate_valid(a, IntMatrix::Ones(3, 3)));
  CHECK_FALSE(certificate_valid(a, IntMatrix::Identity(3, 3)));
  CHECK_FALSE(certificate_valid(IntMatrix::Zero(2, 2), rows({{1, 1}, {0, 1}})));
  CHECK_FALSE(certificate_valid(IntMatrix::Zero(2, 2), rows({{1, -1}, {-1, 1}})));
  CHECK_FALSE(certificate_valid(IntMatrix::Zero(2, 2), rows({{1, 0}, {0, 0}})));
}

TEST_CASE("oracle") {
  SUBCASE("zero matrix: identity within bound 1") {
    const auto c = ps3_oracle(SkewIntMatrix::zero(3), 1);
    REQUIRE(c);
    CHECK(certificate_valid(IntMatrix::Zero(3, 3), c->c));
  }
  SUBCASE("triangle: all-ones within bound 1") {
    const auto c = ps3_oracle(triangle(), 1);
    REQUIRE(c);
    CHECK(c->c == IntMatrix::Ones(3, 3));
  }
  SUBCASE("nonsingular pair: nothing within bound 3") { CHECK_FALSE(ps3_oracle(unit_pair(), 3)); }
  SUBCASE("bound 0 finds nothing") { CHECK_FALSE(ps3_oracle(SkewIntMatrix::zero(2), 0)); }
}
