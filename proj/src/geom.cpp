#include "quadholes/geom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

using detail::orient;

std::string describe(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Signed cross product (b - a) x (c - a); exact in 128 bits.
__int128 cross(const Point& a, const Point& b, const Point& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

// Monotone chain over the given indices; strict hull (collinear points are
// dropped), counterclockwise, starting at the bottommost vertex.
std::vector<int> hull_of(std::span<const Point> pts, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Point& p = pts[static_cast<std::size_t>(a)];
    const Point& q = pts[static_cast<std::size_t>(b)];
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) {
                          return pts[static_cast<std::size_t>(a)] == pts[static_cast<std::size_t>(b)];
                        }),
            idx.end());
  if (idx.size() < 3) return idx;

  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  auto at = [&](int i) -> const Point& { return pts[static_cast<std::size_t>(i)]; };
  for (int i : idx) {
    while (k >= 2 && orient(at(h[k - 2]), at(h[k - 1]), at(i)) <= 0) --k;
    h[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    while (k >= lower && orient(at(h[k - 2]), at(h[k - 1]), at(*it)) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);

  auto start = std::min_element(h.begin(), h.end(),
                                [&](int a, int b) { return lower_than(at(a), at(b)); });
  std::rotate(h.begin(), start, h.end());
  return h;
}

// Some edge of `a` has all of `b` on its closed outer side. The vertex of
// `b` deepest inside each edge's half-plane only moves forward as the edges
// of `a` turn counterclockwise, so one pointer sweep suffices.
bool edge_separates(std::span<const Point> a, std::span<const Point> b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  auto f = [&](std::size_t e, std::size_t q) {
    return cross(a[e], a[(e + 1) % na], b[q % nb]);
  };
  std::size_t j = 0;
  for (std::size_t q = 1; q < nb; ++q)
    if (f(0, q) > f(0, j)) j = q;
  for (std::size_t e = 0; e < na; ++e) {
    std::size_t steps = 0;
    while (steps < nb && f(e, j + 1) >= f(e, j)) {
      j = (j + 1) % nb;
      ++steps;
    }
    if (f(e, j) <= 0) return true;
  }
  return false;
}

bool edge_separates_naive(std::span<const Point> a, std::span<const Point> b) {
  for (std::size_t e = 0; e < a.size(); ++e) {
    const Point& p = a[e];
    const Point& q = a[(e + 1) % a.size()];
    if (std::all_of(b.begin(), b.end(), [&](const Point& r) { return cross(p, q, r) <= 0; }))
      return true;
  }
  return false;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  if (!in_range(a) || !in_range(b) || !in_range(c))
    throw CoordinateRangeError("coordinate magnitude exceeds 2^30");
  return orient(a, b, c);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_)
    if (!in_range(p)) throw CoordinateRangeError("point " + describe(p) + " exceeds |v| <= 2^30");
}

PointSet PointSet::subset(std::span<const int> indices) const {
  PointSet out;
  out.points_.reserve(indices.size());
  for (int i : indices) out.points_.push_back((*this)[i]);
  return out;
}

int PointSet::bottommost() const {
  if (points_.empty()) throw PreconditionError("empty point set has no bottommost point");
  auto it = std::min_element(points_.begin(), points_.end(), lower_than);
  return static_cast<int>(it - points_.begin());
}

std::vector<int> convex_hull(const PointSet& s) {
  std::vector<int> idx(static_cast<std::size_t>(s.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return hull_of(s.points(), std::move(idx));
}

std::vector<int> convex_hull(const PointSet& s, std::span<const int> subset) {
  return hull_of(s.points(), std::vector<int>(subset.begin(), subset.end()));
}

std::optional<std::array<int, 3>> find_degeneracy(const PointSet& s) {
  const int n = s.size();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s[a] < s[b]; });
  for (int k = 1; k < n; ++k)
    if (s[idx[k - 1]] == s[idx[k]]) return std::array<int, 3>{idx[k - 1], idx[k], -1};

  // Three points are collinear iff, seen from the lowest-index one, the two
  // others point in parallel directions. Directions are folded into the
  // half-plane [0, pi) and sorted by angle; parallel ones end up adjacent.
  struct Dir {
    std::int64_t dx, dy;
    int j;
  };
  std::vector<Dir> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    dirs.clear();
    for (int j = i + 1; j < n; ++j) {
      std::int64_t dx = s[j].x - s[i].x;
      std::int64_t dy = s[j].y - s[i].y;
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, j});
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const Dir& a, const Dir& b) { return a.dx * b.dy < a.dy * b.dx; });
    for (std::size_t k = 1; k < dirs.size(); ++k)
      if (dirs[k - 1].dx * dirs[k].dy == dirs[k - 1].dy * dirs[k].dx)
        return std::array<int, 3>{i, std::min(dirs[k - 1].j, dirs[k].j),
                                  std::max(dirs[k - 1].j, dirs[k].j)};
  }
  return std::nullopt;
}

bool is_general_position(const PointSet& s) { return !find_degeneracy(s).has_value(); }

void require_general_position(const PointSet& s) {
  if (auto bad = find_degeneracy(s)) {
    const auto& d = *bad;
    if (d[2] < 0)
      throw PreconditionError("duplicate points at indices " + std::to_string(d[0]) + " and " +
                              std::to_string(d[1]) + " " + describe(s[d[0]]));
    throw PreconditionError("collinear points at indices " + std::to_string(d[0]) + ", " +
                            std::to_string(d[1]) + ", " + std::to_string(d[2]));
  }
}

std::optional<QuadHole> make_quad(const PointSet& s, std::array<int, 4> idx) {
  const std::vector<int> h = hull_of(s.points(), {idx.begin(), idx.end()});
  if (h.size() != 4) return std::nullopt;
  QuadHole q;
  std::copy(h.begin(), h.end(), q.v.begin());
  std::rotate(q.v.begin(), std::min_element(q.v.begin(), q.v.end()), q.v.end());
  return q;
}

std::array<Point, 4> quad_points(const PointSet& s, const QuadHole& q) {
  return {s[q.v[0]], s[q.v[1]], s[q.v[2]], s[q.v[3]]};
}

bool strictly_inside_convex(std::span<const Point> ccw, const Point& p) {
  if (ccw.size() < 3) return false;
  for (std::size_t e = 0; e < ccw.size(); ++e)
    if (orient(ccw[e], ccw[(e + 1) % ccw.size()], p) <= 0) return false;
  return true;
}

bool quad_is_hole(const PointSet& s, std::array<int, 4> idx) {
  const auto q = make_quad(s, idx);
  if (!q) return false;
  const auto poly = quad_points(s, *q);
  for (int i = 0; i < s.size(); ++i) {
    if (i == idx[0] || i == idx[1] || i == idx[2] || i == idx[3]) continue;
    if (strictly_inside_convex(poly, s[i])) return false;
  }
  return true;
}

bool quads_compatible(const PointSet& s, const QuadHole& a, const QuadHole& b) {
  const auto qa = make_quad(s, a.v);
  const auto qb = make_quad(s, b.v);
  if (!qa || !qb) throw PreconditionError("quads_compatible: quad is not in convex position");
  const auto pa = quad_points(s, *qa);
  const auto pb = quad_points(s, *qb);
  return interiors_disjoint_naive(pa, pb);
}

bool interiors_disjoint(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() < 3 || b.size() < 3) return true;
  return edge_separates(a, b) || edge_separates(b, a);
}

bool interiors_disjoint_naive(std::span<const Point> a, std::span<const Point> b) {
  if (a.size() < 3 || b.size() < 3) return true;
  return edge_separates_naive(a, b) || edge_separates_naive(b, a);
}

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw) : v_(std::move(ccw)) {}

bool ConvexPolygon::contains_strictly(const Point& p) const {
  const std::size_t h = v_.size();
  if (h < 3) return false;
  if (orient(v_[0], v_[1], p) <= 0 || orient(v_[h - 1], v_[0], p) <= 0) return false;
  // Largest k in [1, h-2] with p on or left of the diagonal v0 -> vk.
  std::size_t lo = 1;
  std::size_t hi = h - 2;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (orient(v_[0], v_[mid], p) >= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return orient(v_[lo], v_[lo + 1], p) > 0;
}

}  // namespace quadholes
