#pragma once

// Exact predicates over integer coordinates. Every other module builds on
// these; nothing here rounds.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace quadholes {

/// Largest admissible |x| or |y|. Differences fit in 32 bits, so every
/// cross product is a difference of two int64 products and is compared
/// without overflow.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// True if both coordinates are inside [-kCoordLimit, kCoordLimit].
constexpr bool in_range(const Point& p) noexcept {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit && p.y <= kCoordLimit;
}

/// Orientation of the triple: +1 counterclockwise, -1 clockwise, 0 collinear.
/// Throws CoordinateRangeError for points outside the envelope.
int orientation(const Point& a, const Point& b, const Point& c);

namespace detail {
// Unchecked variant for callers that validated their inputs already.
inline int orient(const Point& a, const Point& b, const Point& c) noexcept {
  const std::int64_t lhs = (b.x - a.x) * (c.y - a.y);
  const std::int64_t rhs = (b.y - a.y) * (c.x - a.x);
  return (lhs > rhs) - (lhs < rhs);
}
}  // namespace detail

/// Lexicographic (y, x) order; the minimum is the bottommost point used as
/// the radial origin throughout.
constexpr bool lower_than(const Point& a, const Point& b) noexcept {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

/// An ordered point set; indices are stable identities. Construction checks
/// the coordinate envelope only. General position is checked where inputs
/// enter the system (see require_general_position); subsets of a
/// general-position set inherit the property.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const noexcept { return points_; }

  /// Points at the given indices, in that order.
  PointSet subset(std::span<const int> indices) const;

  /// Index of the lowest point by (y, x).
  int bottommost() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Four point indices in strictly convex position, stored counterclockwise
/// and rotated so the smallest index comes first.
struct QuadHole {
  std::array<int, 4> v{};

  friend bool operator==(const QuadHole&, const QuadHole&) = default;
  friend auto operator<=>(const QuadHole&, const QuadHole&) = default;
};

/// Hull vertices in counterclockwise order starting from the bottommost point.
std::vector<int> convex_hull(const PointSet& s);

/// Hull of a subset; returns indices into `s`.
std::vector<int> convex_hull(const PointSet& s, std::span<const int> subset);

/// A duplicate pair (third entry -1) or a collinear triple, if any.
std::optional<std::array<int, 3>> find_degeneracy(const PointSet& s);

bool is_general_position(const PointSet& s);

/// Throws PreconditionError naming the offending indices.
void require_general_position(const PointSet& s);

/// Orders four indices counterclockwise if they are in strictly convex
/// position; nullopt otherwise.
std::optional<QuadHole> make_quad(const PointSet& s, std::array<int, 4> idx);

/// Convex position and no other point of `s` strictly inside.
bool quad_is_hole(const PointSet& s, std::array<int, 4> idx);

/// True iff the interiors of the two quads are disjoint. Shared vertices and
/// shared edges are allowed. Vertex order inside each quad is irrelevant.
bool quads_compatible(const PointSet& s, const QuadHole& a, const QuadHole& b);

/// True iff `p` lies strictly inside the counterclockwise convex polygon.
bool strictly_inside_convex(std::span<const Point> ccw, const Point& p);

/// Interiors of two counterclockwise convex polygons are disjoint. Runs in
/// O(|a| + |b|). Polygons with fewer than three vertices have no interior.
bool interiors_disjoint(std::span<const Point> a, std::span<const Point> b);

/// Same predicate by testing every edge against every vertex. Quadratic;
/// meant for small polygons and as a cross-check.
bool interiors_disjoint_naive(std::span<const Point> a, std::span<const Point> b);

/// Coordinates of the quad's vertices in stored order.
std::array<Point, 4> quad_points(const PointSet& s, const QuadHole& q);

/// Point-in-polygon queries against one convex polygon in O(log h).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// `ccw` must be a strictly convex counterclockwise vertex list.
  explicit ConvexPolygon(std::vector<Point> ccw);

  std::span<const Point> vertices() const noexcept { return v_; }
  bool contains_strictly(const Point& p) const;

 private:
  std::vector<Point> v_;
};

}  // namespace quadholes
