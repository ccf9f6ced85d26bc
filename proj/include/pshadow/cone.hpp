#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pshadow/matrix.hpp"

namespace pshadow {

/// Extreme ray of {x >= 0, A x = 0}: nonzero, nonnegative, primitive.
using ConeRay = IntVector;

/// Symmetric natural matrix C with nonzero columns and A C = 0, together
/// with the rays it was assembled from.
struct Ps3Certificate {
  IntMatrix c;
  std::vector<ConeRay> rays_used;
};

/// No extreme ray is positive at `missing_index`.
struct Ps3Witness {
  int missing_index = 0;
  int ray_count = 0;
};

using Ps3Decision = std::variant<Ps3Certificate, Ps3Witness>;

/// Extreme rays of the cone {x in Q^n : x >= 0, a x = 0} by double
/// description, starting from the orthant and cutting with rows 0..n-1.
std::vector<ConeRay> nonneg_kernel_rays(const IntMatrix& a);
inline std::vector<ConeRay> nonneg_kernel_rays(const SkewIntMatrix& a) {
  return nonneg_kernel_rays(a.matrix());
}

/// Decides whether a symmetric natural C with nonzero columns and a C = 0
/// exists. A feasible answer carries C = sum r r^T over a greedy cover of
/// the index set by ray supports.
Ps3Decision ps3_decide(const SkewIntMatrix& a);

/// Structural check of a certificate against its source matrix: symmetry,
/// nonnegativity, nonzero columns and a C = 0.
bool certificate_valid(const IntMatrix& a, const IntMatrix& c);

/// Brute-force search over symmetric matrices with entries in [0, bound].
/// Returns the first feasible C in lexicographic order of the upper
/// triangle (row-major, diagonal included), or nullopt. Independent of the
/// cone computation; meant for cross-checking ps3_decide on small inputs.
std::optional<Ps3Certificate> ps3_oracle(const SkewIntMatrix& a, Int bound);

inline bool is_feasible(const Ps3Decision& d) {
  return std::holds_alternative<Ps3Certificate>(d);
}

}  // namespace pshadow
