#pragma once

#include <string>
#include <vector>

#include "pshadow/enumerate.hpp"
#include "pshadow/quiver.hpp"

namespace pshadow {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  /// The named check, or nullptr.
  const Check* find(const std::string& name) const;
};

/// Checks that signed_adjacency(q) * c vanishes, exactly. Throws InvalidArgument when c is not
/// symmetric and nonnegative or the sizes differ.
Report cartan_identity_check(const Quiver& q, const IntMatrix& c);

/// Rank over the rationals by plain Gaussian elimination on fractions.
/// Deliberately separate from the fraction-free routine the producers use.
int rational_rank(const IntMatrix& m);

/// Re-derives every property a record claims, using routines that share no
/// code with the enumerator or the cone solver.
Report audit_record(const ShadowRecord& r, bool identify_opposite = true);

}  // namespace pshadow
