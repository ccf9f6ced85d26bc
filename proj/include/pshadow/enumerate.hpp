#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pshadow/cone.hpp"
#include "pshadow/matrix.hpp"

namespace pshadow {

/// Tameness bounds applied row by row. The defaults are the conforming
/// values; anything else is reported as non-conforming.
struct TameFilter {
  Int max_abs_entry = 2;
  int max_ones_per_row = 4;

  bool conforming() const { return max_abs_entry == 2 && max_ones_per_row == 4; }
};

enum class RecordKind { Shade, Shadow };

struct ShadowRecord {
  SkewIntMatrix matrix;  // canonical form
  int n = 0;
  int rank = 0;
  std::optional<Ps3Certificate> certificate;  // present for shadows
  RecordKind kind = RecordKind::Shade;
};

/// No nonzero row is single-signed.
bool ps2_holds(const SkewIntMatrix& a);

/// T1 (entry range), T2 (a +2 next to another positive entry, or a -2 next
/// to another negative one) and T3 (at most max_ones_per_row entries equal
/// to +1, likewise for -1).
bool tame_row_ok(std::span<const Int> row, const TameFilter& filter = {});

/// Name ("T1", "T2" or "T3") of the first tameness condition the row breaks.
std::optional<std::string> tame_row_violation(std::span<const Int> row, const TameFilter& filter = {});

/// tame_row_ok for every row of `a`.
bool tame_ok(const SkewIntMatrix& a, const TameFilter& filter = {});

/// First failing condition of a tame periodicity shadow, checked in the
/// order T1, T2, T3, PS1, PS2, PS3 and reported as e.g. "PS2"; nullopt when
/// `a` is a shadow.
std::optional<std::string> shadow_violation(const SkewIntMatrix& a, const TameFilter& filter = {});

struct EnumerationOptions {
  TameFilter filter;
  int workers = 1;
  /// Also identify A with -A, the signed adjacency of the opposite quiver.
  bool identify_opposite = true;
};

/// Representative of the class of `a` under simultaneous permutation and,
/// when `identify_opposite`, negation: the lexicographically least of
/// canonical_form(a) and canonical_form(-a).
SkewIntMatrix class_representative(const SkewIntMatrix& a, bool identify_opposite = true);

/// All shades of size n up to equivalence, as class representatives sorted
/// lexicographically. Throws UnsupportedSize outside [1, max].
std::vector<ShadowRecord> enumerate_shades(int n, const EnumerationOptions& opts = {});

/// The shades that also admit a PS3 certificate.
std::vector<ShadowRecord> enumerate_shadows(int n, const EnumerationOptions& opts = {});

/// Streaming forms: `sink` receives records in the same sorted order.
void enumerate_shades(int n, const EnumerationOptions& opts,
                      const std::function<void(const ShadowRecord&)>& sink);
void enumerate_shadows(int n, const EnumerationOptions& opts,
                       const std::function<void(const ShadowRecord&)>& sink);

}  // namespace pshadow
