#pragma once

// The top-level recursion: small bases for n <= 14, and for larger n a good
// split into an 11-point side solved directly and a remainder solved again.

#include <string>
#include <vector>

#include "quadholes/geom.hpp"

namespace quadholes {

/// max(0, floor(5n/11) - 1).
int lower_bound_formula(int n);

struct TraceEntry {
  int depth = 0;
  int size = 0;         ///< points in the subproblem
  std::string kind;     ///< "empty", "base", "split"
  std::string method;   ///< small-solver method or good-split case
  int quads = 0;        ///< holes contributed at this step
  bool fell_back = false;
};

struct Solution {
  std::vector<QuadHole> quads;
  int floor = 0;
  std::vector<TraceEntry> trace;
};

/// Requires |S| >= 3 and general position (PreconditionError otherwise).
/// The result is verified before it is returned; a failed verification
/// raises ContradictionError.
Solution solve(const PointSet& s);

}  // namespace quadholes
