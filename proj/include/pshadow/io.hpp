#pragma once

#include <json.hpp>
#include <string>

#include "pshadow/cone.hpp"
#include "pshadow/enumerate.hpp"
#include "pshadow/quiver.hpp"
#include "pshadow/reconstruct.hpp"
#include "pshadow/verify.hpp"

namespace pshadow {

using Json = nlohmann::json;

/// Matrices travel as {"n": n, "rows": [[...], ...]}. Parsers throw
/// InvalidArgument on malformed input.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
SkewIntMatrix skew_matrix_from_json(const Json& j);

/// {"n": n, "arr": [[...], ...]}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json certificate_json(const SkewIntMatrix& a, const Ps3Certificate& c);
Json witness_json(const SkewIntMatrix& a, const Ps3Witness& w);

/// {"kind": "shade"|"shadow", "n", "rows", "rank", "certificate": matrix|null}
Json to_json(const ShadowRecord& r);
ShadowRecord record_from_json(const Json& j);

Json to_json(const BlockMatch& b);
Json to_json(const CandidateQuiver& c);
Json to_json(const Report& r);

/// Graphviz digraph. Vertices of `blocks` are coloured black (internal) or
/// white (outlet); every arrow, loop and parallel copy is drawn separately.
std::string to_dot(const Quiver& q, const std::vector<BlockMatch>& blocks = {});

}  // namespace pshadow
