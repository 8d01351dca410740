#pragma once

// Deterministic test-instance generators. Every output is in general
// position; the same (kind, n, seed, bbox) always gives the same points.

#include <cstdint>
#include <string>
#include <string_view>

#include "quadholes/geom.hpp"

namespace quadholes {

enum class GenKind { Random, Convex, Clustered };

std::string to_string(GenKind k);
/// "random", "convex" or "clustered"; PreconditionError otherwise.
GenKind parse_gen_kind(std::string_view name);

inline constexpr std::int64_t kDefaultBBox = std::int64_t{1} << 20;

/// Random: uniform in [0, bbox)^2, resampling points that cause a duplicate
/// or a collinear triple. Convex: n points in strictly convex position near
/// a circle inscribed in the box. Clustered: two x-separated random
/// clusters. Throws PreconditionError for n < 3, a bbox outside
/// (0, 2^30], or a box too small to host the requested set.
PointSet generate(GenKind kind, int n, std::uint64_t seed, std::int64_t bbox = kDefaultBBox);

}  // namespace quadholes
