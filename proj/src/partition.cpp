#include "quadholes/partition.hpp"

#include <algorithm>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

using detail::orient;

bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int s1 = orient(a, b, p);
  return s1 != 0 && s1 == orient(b, c, p) && s1 == orient(c, a, p);
}

// p and ref strictly on the same side of line xy.
bool same_side(const Point& x, const Point& y, const Point& ref, const Point& p) {
  const int side = orient(x, y, p);
  return side != 0 && side == orient(x, y, ref);
}

bool opposite_side(const Point& x, const Point& y, const Point& ref, const Point& p) {
  const int side = orient(x, y, p);
  return side != 0 && side == -orient(x, y, ref);
}

bool in_cone(const PointSet& t, int apex, int from, int to, int p) {
  if (p == apex || p == from || p == to) return false;
  const int sgn = orient(t[apex], t[from], t[to]);
  return sgn != 0 && orient(t[apex], t[from], t[p]) == sgn && orient(t[apex], t[p], t[to]) == sgn;
}

// Hull neighbours of v within the hull of `subset`.
std::vector<int> hull_neighbours(const PointSet& t, const std::vector<int>& subset, int v) {
  const std::vector<int> hull = convex_hull(t, subset);
  const auto it = std::find(hull.begin(), hull.end(), v);
  if (it == hull.end()) return {};
  const std::size_t k = static_cast<std::size_t>(it - hull.begin());
  const std::size_t h = hull.size();
  return {hull[(k + h - 1) % h], hull[(k + 1) % h]};
}

std::vector<int> erase(std::vector<int> v, int x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
  return v;
}

std::vector<int> with(std::vector<int> v, int x) {
  v.push_back(x);
  return v;
}

struct Candidate {
  std::array<int, 4> bridge{};
  std::vector<int> side_a;
  std::vector<int> side_b;
  std::string label;
};

// The case analysis with pivot a1, a vertex of the hull of `t`. Returns the
// proposed split or a reason the geometric premise of a case did not hold.
std::optional<Candidate> attempt(const PointSet& t, int a1, int s_count, std::string& why) {
  const int n = t.size();
  std::vector<int> q;
  for (int i = 0; i < n; ++i)
    if (i != a1) q.push_back(i);
  // Clockwise-most first: every point sits within a half-plane at a1.
  std::sort(q.begin(), q.end(), [&](int x, int y) { return orient(t[a1], t[x], t[y]) > 0; });

  const int a2 = q[static_cast<std::size_t>(s_count - 2)];
  std::vector<int> A{a1};
  A.insert(A.end(), q.begin(), q.begin() + (s_count - 1));
  std::vector<int> B(q.begin() + (s_count - 1), q.end());
  const int b1 = B[0];
  const int b2 = B[1];
  const Point &P1 = t[a1], &P2 = t[a2], &Q1 = t[b1], &Q2 = t[b2];

  if (!in_triangle(P1, P2, Q2, Q1)) return Candidate{{a1, a2, b1, b2}, A, with(erase(B, b1), a1), "(a)"};

  std::vector<int> a_cone, b_cone;
  for (int p : A)
    if (in_cone(t, b1, b2, a2, p)) a_cone.push_back(p);
  for (int p : B)
    if (in_cone(t, b1, b2, a2, p)) b_cone.push_back(p);

  if (!a_cone.empty()) {
    for (int a3 : hull_neighbours(t, A, a2))
      if (a3 != a1 && std::find(a_cone.begin(), a_cone.end(), a3) != a_cone.end())
        return Candidate{{b1, b2, a3, a2}, A, with(erase(B, b1), a1), "(b) A-point in cone"};
    why = "no hull neighbour of a2 inside C(b1; b2, a2)";
    return std::nullopt;
  }
  if (!b_cone.empty()) {
    // Neighbour on the hull of the side the bridge must respect; b1 leaves B.
    for (int b3 : hull_neighbours(t, with(erase(B, b1), a1), b2))
      if (std::find(b_cone.begin(), b_cone.end(), b3) != b_cone.end())
        return Candidate{{b1, b2, b3, a2}, A, with(erase(B, b1), a1), "(b) B-point in cone"};
    why = "no hull neighbour of b2 inside C(b1; b2, a2)";
    return std::nullopt;
  }

  const int a3 = find_attack_point(t, b1, a1, a2).value_or(a2);
  const int b3c = find_attack_point(t, b1, a1, b2).value_or(b2);
  if (a3 != a2 && same_side(Q1, t[a3], P1, t[b3c]))
    return Candidate{{b1, a3, a1, b3c}, with(erase(A, a1), b1), B, "(c)"};

  std::vector<int> b_above;
  for (int p : B)
    if (opposite_side(P2, Q2, P1, t[p])) b_above.push_back(p);
  if (b_above.empty()) {
    const int b3 = find_attack_point(t, b1, b2, a1).value_or(a1);
    if (b3 == a1) {
      why = "C(b1; b2, a1) is empty";
      return std::nullopt;
    }
    return Candidate{{b1, b3, b2, a2}, with(A, b1), with(erase(B, b2), a1), "(d)"};
  }

  int b3 = -1;
  for (int c : hull_neighbours(t, B, b2))
    if (std::find(b_above.begin(), b_above.end(), c) != b_above.end()) b3 = c;
  if (b3 < 0) {
    why = "no hull neighbour of b2 above a2b2";
    return std::nullopt;
  }
  std::vector<int> a_above;
  for (int p : A)
    if (opposite_side(P2, Q2, P1, t[p])) a_above.push_back(p);
  if (!a_above.empty()) {
    for (int a4 : hull_neighbours(t, A, a2))
      if (std::find(a_above.begin(), a_above.end(), a4) != a_above.end())
        return Candidate{{a2, b2, b3, a4}, with(A, b1), with(B, a1), "(e)"};
    why = "no hull neighbour of a2 above a2b2";
    return std::nullopt;
  }
  if (a3 == a2) {
    why = "C(b1; a1, a2) is empty";
    return std::nullopt;
  }
  const auto a4 = find_attack_point(t, b1, a2, a3);
  if (!a4) {
    why = "C(b1; a2, a3) is empty";
    return std::nullopt;
  }
  const int b4 = find_attack_point(t, a2, b1, b2).value_or(b2);
  return Candidate{{b1, b4, a2, *a4}, with(erase(A, a2), b1), with(erase(B, b1), a2), b4 == b2 ? "(f) b4=b2" : "(f)"};
}

GoodSplit to_split(const PointSet& s, Candidate c, std::string method, bool fell_back) {
  GoodSplit g;
  std::sort(c.side_a.begin(), c.side_a.end());
  std::sort(c.side_b.begin(), c.side_b.end());
  g.side_a = std::move(c.side_a);
  g.side_b = std::move(c.side_b);
  const auto q = make_quad(s, c.bridge);
  if (q) g.bridge = *q;
  else g.bridge.v = c.bridge;
  g.hull_a = convex_hull(s, g.side_a);
  g.hull_b = convex_hull(s, g.side_b);
  g.method = std::move(method);
  g.fell_back = fell_back;
  return g;
}

std::vector<Point> coords(const PointSet& s, const std::vector<int>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(s[i]);
  return out;
}

}  // namespace

std::optional<int> find_attack_point(const PointSet& s, int apex, int from, int to) {
  const int sgn = orient(s[apex], s[from], s[to]);
  if (sgn == 0) throw PreconditionError("attack point: cone bounding rays are collinear");
  std::optional<int> best;
  for (int p = 0; p < s.size(); ++p) {
    if (!in_cone(s, apex, from, to, p)) continue;
    if (!best || orient(s[apex], s[p], s[*best]) == sgn) best = p;
  }
  return best;
}

int attack_point(const PointSet& s, int apex, int from, int to) {
  const auto p = find_attack_point(s, apex, from, to);
  if (!p) throw PreconditionError("attack point: cone interior is empty");
  return *p;
}

std::string check_good_split(const PointSet& s, const GoodSplit& g, int r, int s_count) {
  const int n = s.size();
  if (static_cast<int>(g.side_a.size()) < s_count) return "side A has fewer than s points";
  if (static_cast<int>(g.side_b.size()) < r) return "side B has fewer than r points";

  std::vector<char> in_a(static_cast<std::size_t>(n), 0), in_b(static_cast<std::size_t>(n), 0);
  for (int i : g.side_a) {
    if (i < 0 || i >= n) return "side A has an invalid index";
    in_a[static_cast<std::size_t>(i)] = 1;
  }
  for (int i : g.side_b) {
    if (i < 0 || i >= n) return "side B has an invalid index";
    in_b[static_cast<std::size_t>(i)] = 1;
  }
  for (int v : g.bridge.v)
    if (v < 0 || v >= n) return "bridge has an invalid index";

  const std::vector<Point> hull_a = coords(s, convex_hull(s, g.side_a));
  const std::vector<Point> hull_b = coords(s, convex_hull(s, g.side_b));
  if (!interiors_disjoint(hull_a, hull_b)) return "side hulls overlap";

  const ConvexPolygon poly_a(hull_a), poly_b(hull_b);
  for (int i = 0; i < n; ++i) {
    if (!in_a[static_cast<std::size_t>(i)] && poly_a.contains_strictly(s[i]))
      return "point " + std::to_string(i) + " is inside the hull of side A";
    if (!in_b[static_cast<std::size_t>(i)] && poly_b.contains_strictly(s[i]))
      return "point " + std::to_string(i) + " is inside the hull of side B";
  }

  if (!quad_is_hole(s, g.bridge.v)) return "bridge is not a 4-hole";
  const auto bridge = quad_points(s, *make_quad(s, g.bridge.v));
  if (!interiors_disjoint(bridge, hull_a)) return "bridge overlaps side A";
  if (!interiors_disjoint(bridge, hull_b)) return "bridge overlaps side B";

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) covered[static_cast<std::size_t>(i)] = in_a[static_cast<std::size_t>(i)] | in_b[static_cast<std::size_t>(i)];
  for (int v : g.bridge.v) covered[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < n; ++i)
    if (!covered[static_cast<std::size_t>(i)]) return "point " + std::to_string(i) + " is in neither side nor the bridge";
  return {};
}

GoodSplit good_split(const PointSet& s, int r, int s_count) {
  if (r < 4 || s_count < 4) throw PreconditionError("good split needs r, s >= 4");
  if (s.size() < r + s_count) throw PreconditionError("good split needs at least r + s points");

  std::vector<Point> flipped;
  flipped.reserve(static_cast<std::size_t>(s.size()));
  for (const Point& p : s.points()) flipped.push_back({-p.x, p.y});
  const PointSet mirrored(std::move(flipped));

  std::string first_failure, last_failure;
  bool first = true;
  for (const PointSet* t : {&s, &mirrored}) {
    const bool is_mirror = t == &mirrored;
    for (int a1 : convex_hull(*t)) {
      std::string why;
      auto c = attempt(*t, a1, s_count, why);
      const std::string method = "pivot " + std::to_string(a1) + (is_mirror ? " mirrored" : "") + " case " +
                                 (c ? c->label : std::string("none"));
      if (c) {
        GoodSplit g = to_split(s, std::move(*c), first ? method : method + " after " + first_failure, !first);
        why = check_good_split(s, g, r, s_count);
        if (why.empty()) return g;
      }
      last_failure = method + ": " + why;
      if (first) first_failure = last_failure;
      first = false;
    }
  }
  throw ContradictionError("no pivot produced a valid good split; last attempt " + last_failure);
}

}  // namespace quadholes
