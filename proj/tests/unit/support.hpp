#pragma once

// Independent reference implementations for the unit tests. Nothing here
// calls the predicates under test: orientation uses big integers, overlap is
// decided by clipping with exact rationals, holes by checking every point.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadholes/generate.hpp"
#include "quadholes/geom.hpp"
#include "quadholes/radial.hpp"

namespace support {

using quadholes::Point;
using quadholes::PointSet;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int big_orient(const Point& a, const Point& b, const Point& c) {
  const BigInt v = BigInt(b.x - a.x) * BigInt(c.y - a.y) - BigInt(b.y - a.y) * BigInt(c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline bool big_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int s = big_orient(a, b, p);
  return s != 0 && s == big_orient(b, c, p) && s == big_orient(c, a, p);
}

struct RPoint {
  Rat x, y;
};

// Signed area of a polygon, positive for counterclockwise.
inline Rat area(const std::vector<RPoint>& poly) {
  Rat a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a / 2;
}

// Orders points in convex position counterclockwise by trying every cyclic
// arrangement; nullopt if they are not in strictly convex position.
inline std::optional<std::vector<Point>> ccw_convex(std::vector<Point> pts) {
  std::sort(pts.begin() + 1, pts.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      ok = big_orient(pts[i], pts[(i + 1) % pts.size()], pts[(i + 2) % pts.size()]) > 0;
    if (ok) return pts;
  } while (std::next_permutation(pts.begin() + 1, pts.end()));
  return std::nullopt;
}

// Area of the intersection of two counterclockwise convex polygons, by
// Sutherland-Hodgman clipping in exact arithmetic.
inline Rat overlap_area(const std::vector<Point>& subject, const std::vector<Point>& clip) {
  std::vector<RPoint> poly;
  for (const Point& p : subject) poly.push_back({Rat(p.x), Rat(p.y)});
  for (std::size_t e = 0; e < clip.size() && !poly.empty(); ++e) {
    const Point& a = clip[e];
    const Point& b = clip[(e + 1) % clip.size()];
    const auto side = [&](const RPoint& p) { return Rat(b.x - a.x) * (p.y - a.y) - Rat(b.y - a.y) * (p.x - a.x); };
    std::vector<RPoint> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RPoint& p = poly[i];
      const RPoint& q = poly[(i + 1) % poly.size()];
      const Rat sp = side(p), sq = side(q);
      if (sp >= 0) out.push_back(p);
      if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
        const Rat t = sp / (sp - sq);
        out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    poly = std::move(out);
  }
  return poly.size() < 3 ? Rat(0) : area(poly);
}

inline std::vector<Point> coords(const PointSet& s, const std::vector<int>& idx) {
  std::vector<Point> out;
  for (int i : idx) out.push_back(s[i]);
  return out;
}

// Four indices in convex position with no other point strictly inside.
inline bool naive_hole(const PointSet& s, std::array<int, 4> q) {
  const auto poly = ccw_convex(coords(s, {q.begin(), q.end()}));
  if (!poly) return false;
  for (int i = 0; i < s.size(); ++i) {
    if (std::find(q.begin(), q.end(), i) != q.end()) continue;
    bool inside = true;
    for (std::size_t e = 0; e < 4 && inside; ++e) inside = big_orient((*poly)[e], (*poly)[(e + 1) % 4], s[i]) > 0;
    if (inside) return false;
  }
  return true;
}

inline std::vector<std::array<int, 4>> naive_holes(const PointSet& s) {
  std::vector<std::array<int, 4>> out;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (naive_hole(s, {a, b, c, d})) out.push_back({a, b, c, d});
  return out;
}

inline bool naive_compatible(const PointSet& s, const std::array<int, 4>& a, const std::array<int, 4>& b) {
  const auto pa = ccw_convex(coords(s, {a.begin(), a.end()}));
  const auto pb = ccw_convex(coords(s, {b.begin(), b.end()}));
  return overlap_area(*pa, *pb) == 0;
}

// Maximum pairwise-compatible subfamily by plain include/exclude recursion.
inline int naive_max_compatible(const PointSet& s) {
  const auto holes = naive_holes(s);
  const std::size_t h = holes.size();
  std::vector<std::vector<char>> ok(h, std::vector<char>(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) ok[i][j] = ok[j][i] = naive_compatible(s, holes[i], holes[j]);
  int best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (i == h || chosen.size() + (h - i) <= static_cast<std::size_t>(best)) return;
    if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][i]; })) {
      chosen.push_back(i);
      go(i + 1);
      chosen.pop_back();
    }
    go(i + 1);
  };
  go(0);
  return best;
}

inline PointSet random_set(int n, std::uint64_t seed, std::int64_t bbox = quadholes::kDefaultBBox) {
  return quadholes::generate(quadholes::GenKind::Random, n, seed, bbox);
}

// First frame over seeds from `seed` on whose points satisfy `pred`.
template <typename Pred>
std::optional<quadholes::RadialFrame> find_frame(int n, Pred&& pred, std::uint64_t seed = 1,
                                                 int tries = 400000, std::int64_t bbox = 1 << 12) {
  for (int t = 0; t < tries; ++t) {
    const quadholes::RadialFrame f(random_set(n, seed + static_cast<std::uint64_t>(t), bbox));
    if (pred(f)) return f;
  }
  return std::nullopt;
}

}  // namespace support
