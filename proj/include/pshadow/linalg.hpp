#pragma once

#include <utility>
#include <vector>

#include "pshadow/matrix.hpp"

namespace pshadow {

/// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);

/// PS1 test. Odd sizes short-circuit to true: skew matrices of odd order
/// have zero determinant.
bool is_singular(const SkewIntMatrix& a);

/// Basis of {x : m x = 0}. Each vector is primitive (content 1) with its
/// first nonzero entry positive.
std::vector<IntVector> rational_kernel_basis(const IntMatrix& m);

/// Divides by the content and flips the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Content (gcd of absolute values) of an integer vector; 0 for the zero vector.
Int content(const IntVector& v);

/// P^T A P: entry (i, j) of the result is a(p(i), p(j)).
SkewIntMatrix permute(const SkewIntMatrix& a, const Permutation& p);
IntMatrix permute(const IntMatrix& m, const Permutation& p);

struct CanonicalForm {
  SkewIntMatrix matrix;
  Permutation permutation;
};

/// Lexicographically least row-major representative of the simultaneous
/// row/column permutation orbit of `a`, together with the least mapping
/// attaining it. Throws UnsupportedSize above max_supported_size().
CanonicalForm canonical_form(const SkewIntMatrix& a);

/// Raw-buffer interface for the enumerator hot path.
namespace detail {

/// Canonical entry sequence of an n x n row-major matrix held in `in`.
/// Writes the minimal sequence into `out` and the minimizing mapping into
/// `perm`. All buffers hold at least n*n (resp. n) elements.
void canonical_sequence(int n, const signed char* in, signed char* out, int* perm);

}  // namespace detail

}  // namespace pshadow
