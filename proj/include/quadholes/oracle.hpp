#pragma once

// Ground truth: brute-force hole enumeration, exact maximum compatible sets
// for small inputs, and the solution verifier every other module answers to.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadholes/geom.hpp"

namespace quadholes {

struct HoleCatalog {
  std::vector<QuadHole> holes;
  /// conflict[a] has bit b set iff holes a and b are NOT compatible.
  /// A hole conflicts with itself.
  std::vector<std::vector<std::uint64_t>> conflict;

  int size() const noexcept { return static_cast<int>(holes.size()); }
  bool conflicts(int a, int b) const {
    return (conflict[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1u;
  }
};

/// Tests all C(n, 4) subsets. Holes come out in lexicographic order of their
/// sorted vertex sets.
HoleCatalog enumerate_4holes(const PointSet& s);

struct OracleLimits {
  int max_points = 11;
  int max_holes = 400;
};

struct MaxCompatible {
  int count = 0;
  std::vector<QuadHole> witness;
};

/// Exact maximum pairwise-compatible subset (maximum independent set of the
/// conflict graph) by branch and bound. Throws CapExceededError when the
/// catalog is larger than `limits.max_holes`.
MaxCompatible max_compatible(const HoleCatalog& catalog, OracleLimits limits = {});

/// Convenience: enumerate then maximize. Also enforces `limits.max_points`.
MaxCompatible max_compatible(const PointSet& s, OracleLimits limits = {});

/// Some `k` pairwise compatible holes, or nullopt if none exist. Stops as
/// soon as a witness is found.
std::optional<std::vector<QuadHole>> find_compatible(const HoleCatalog& catalog, int k);

/// Greedy lower bound in catalog order. Not optimal.
std::vector<QuadHole> greedy_compatible(const HoleCatalog& catalog);

struct Verdict {
  enum class Kind { Ok, Degenerate, BadIndex, NotConvex, NotEmpty, Overlap };

  Kind kind = Kind::Ok;
  std::string message;
  std::vector<int> where;  ///< offending point or quad indices

  bool ok() const noexcept { return kind == Kind::Ok; }
};

std::string to_string(Verdict::Kind k);

/// Checks, in order: general position of `s`; every quad is four distinct
/// valid indices in convex position with no other point strictly inside;
/// all pairs compatible. Reports the first violation.
Verdict verify_solution(const PointSet& s, std::span<const QuadHole> quads);

/// verify_solution without the general-position pass, for callers that
/// already established it.
Verdict verify_quads(const PointSet& s, std::span<const QuadHole> quads);

}  // namespace quadholes
