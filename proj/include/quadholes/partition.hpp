#pragma once

// Splitting a point set into two convex regions plus one bridging hole that
// is compatible with both, so that holes found independently on either side
// can be pooled.

#include <optional>
#include <string>
#include <vector>

#include "quadholes/geom.hpp"

namespace quadholes {

/// First point of `s` met by the half-line from `apex` rotating from ray
/// apex->from toward ray apex->to, among points strictly inside the cone
/// C(apex; from, to). The cone must be narrower than a half-plane. Throws
/// PreconditionError when the cone interior is empty.
int attack_point(const PointSet& s, int apex, int from, int to);

/// Same, but nullopt for an empty cone.
std::optional<int> find_attack_point(const PointSet& s, int apex, int from, int to);

struct GoodSplit {
  std::vector<int> side_a;  ///< at least s points, sorted
  std::vector<int> side_b;  ///< at least r points, sorted
  QuadHole bridge;
  /// The separating regions, given as the two hulls (counterclockwise point
  /// indices). Their interiors are disjoint.
  std::vector<int> hull_a;
  std::vector<int> hull_b;
  std::string method;  ///< which case fired and with which pivot
  /// The construction from the lowest point did not verify and another
  /// pivot or orientation was used.
  bool fell_back = false;
};

/// Requires r, s >= 4 and |S| >= r + s, general position.
GoodSplit good_split(const PointSet& s, int r, int s_count);

/// Empty string when every invariant holds, otherwise the first violation:
/// side sizes; hull interiors disjoint; no point of S strictly inside a hull
/// it does not belong to; bridge a hole of S compatible with both hulls;
/// every point of S in a side or on the bridge.
std::string check_good_split(const PointSet& s, const GoodSplit& g, int r, int s_count);

}  // namespace quadholes
