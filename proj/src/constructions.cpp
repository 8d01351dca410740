#include "quadholes/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "quadholes/errors.hpp"
#include "quadholes/oracle.hpp"
#include "quadholes/small_solvers.hpp"

namespace quadholes {

namespace {

using detail::orient;

// Sign of the cross product u x v for difference vectors, compared as two
// products so nothing overflows.
int cross_sign(const Point& u, const Point& v) {
  const std::int64_t lhs = u.x * v.y;
  const std::int64_t rhs = u.y * v.x;
  return (lhs > rhs) - (lhs < rhs);
}

Point minus(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

void require_run(const RadialFrame& f, int i, int j, char sign, const char* what) {
  const SignatureSequence& sig = f.signature();
  if (sig.empty() || i < sig.first() || j > sig.last() || i > j)
    throw PreconditionError(std::string(what) + ": run outside the signature range");
  for (int p = i; p <= j; ++p)
    if (sig.at(p) != sign) throw PreconditionError(std::string(what) + ": run has a sign of the wrong kind");
}

void set_caps(const RadialFrame& f, ConstructionResult& r) {
  r.front_clear = std::all_of(r.quads.begin(), r.quads.end(), [&](const QuadHole& q) { return avoids_cap(f, q, true); });
  r.back_clear = std::all_of(r.quads.begin(), r.quads.end(), [&](const QuadHole& q) { return avoids_cap(f, q, false); });
}

void append_fan(const RadialFrame& f, std::vector<QuadHole>& out, const std::vector<int>& cyclic) {
  const auto fan = partition_convex_polygon(f.points(), cyclic);
  out.insert(out.end(), fan.begin(), fan.end());
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int p = a; p <= b; ++p) v.push_back(p);
  return v;
}

// First j in [0, k] with p_c below l_{i+j}, or -1.
int first_line_below(const RadialFrame& f, int i, int k, int c) {
  for (int j = 0; j <= k; ++j)
    if (f.below(i + j, i + 2 * k + 1 - j, c)) return j;
  return -1;
}

}  // namespace

std::string to_string(EvenMinusCase c) {
  switch (c) {
    case EvenMinusCase::LeftBelowFirst: return "left-below-first";
    case EvenMinusCase::LeftBelowLater: return "left-below-later";
    case EvenMinusCase::RightBelowFirst: return "right-below-first";
    case EvenMinusCase::RightBelowLater: return "right-below-later";
    case EvenMinusCase::AboveAll: return "above-all";
  }
  return "unknown";
}

QuadHole frame_quad(const RadialFrame& f, int a, int b, int c, int d) {
  const auto q = make_quad(f.points(), {a, b, c, d});
  if (!q)
    throw ContradictionError("positions " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) +
                             " " + std::to_string(d) + " are not in convex position");
  return *q;
}

std::vector<QuadHole> partition_convex_polygon(const PointSet& s, std::span<const int> cyclic) {
  const std::size_t m = cyclic.size();
  if (m % 2 != 0) throw PreconditionError("polygon partition needs an even number of vertices");
  std::vector<QuadHole> out;
  for (std::size_t t = 1; t + 2 < m; t += 2) {
    const auto q = make_quad(s, {cyclic[0], cyclic[t], cyclic[t + 1], cyclic[t + 2]});
    if (!q) throw ContradictionError("polygon partition: vertices are not in convex position");
    out.push_back(*q);
  }
  return out;
}

ConstructionResult quads_from_plus_run(const RadialFrame& f, int i, int j) {
  require_run(f, i, j, '+', "plus run");
  if ((j - i + 1) % 2 != 0) throw PreconditionError("plus run must have even length");
  ConstructionResult r;
  r.first = i - 1;
  r.last = j + 1;
  // Fan from p_{i-1}: consecutive quads share a diagonal instead of
  // crossing each other.
  append_fan(f, r.quads, range(i - 1, j + 1));
  set_caps(f, r);
  return r;
}

ConstructionResult quads_from_minus_run(const RadialFrame& f, int i, int j) {
  require_run(f, i, j, '-', "minus run");
  if ((j - i + 1) % 2 == 0) throw PreconditionError("minus run must have odd length");
  ConstructionResult r;
  r.first = i - 1;
  r.last = j + 1;
  std::vector<int> poly{0};
  for (int p = i - 1; p <= j + 1; ++p) poly.push_back(p);
  append_fan(f, r.quads, poly);
  set_caps(f, r);
  return r;
}

ConstructionResult quads_even_minus(const RadialFrame& f, int i, int k, Side first) {
  if (k < 1) throw PreconditionError("even-minus construction needs k >= 1");
  const int left = i - 1;
  const int right = i + 2 * k + 2;
  if (left < 1 || right > f.size() - 1) throw PreconditionError("even-minus construction: outer points missing");
  require_run(f, i + 1, i + 2 * k, '-', "even-minus");

  ConstructionResult r;
  r.first = left;
  r.last = right;

  const int jl = first_line_below(f, i, k, left);
  const int jr = first_line_below(f, i, k, right);
  std::optional<EvenMinusCase> which;
  if (first == Side::Left) {
    if (jl >= 0) which = jl == 0 ? EvenMinusCase::LeftBelowFirst : EvenMinusCase::LeftBelowLater;
    else if (jr >= 0) which = jr == 0 ? EvenMinusCase::RightBelowFirst : EvenMinusCase::RightBelowLater;
  } else {
    if (jr >= 0) which = jr == 0 ? EvenMinusCase::RightBelowFirst : EvenMinusCase::RightBelowLater;
    else if (jl >= 0) which = jl == 0 ? EvenMinusCase::LeftBelowFirst : EvenMinusCase::LeftBelowLater;
  }
  if (!which) which = EvenMinusCase::AboveAll;
  r.lemma_case = which;

  const int hi = i + 2 * k + 1;
  bool assertion_holds = true;
  try {
    switch (*which) {
      case EvenMinusCase::LeftBelowFirst:
        r.quads.push_back(frame_quad(f, 0, left, i, hi));
        append_fan(f, r.quads, range(i, hi));
        r.forbidden_minus = {left};
        break;
      case EvenMinusCase::RightBelowFirst:
        r.quads.push_back(frame_quad(f, 0, i, hi, right));
        append_fan(f, r.quads, range(i, hi));
        r.forbidden_minus = {right};
        break;
      case EvenMinusCase::LeftBelowLater: {
        const int j = jl;
        r.lemma_j = j;
        // Checked, not proved: p_{i-1} sees the chord p_{i+j-1} p_{i+2k+1-j}
        // from above.
        assertion_holds = f.above(i + j - 1, hi - j, left);
        r.quads.push_back(frame_quad(f, left, i + j, hi - j, i + j - 1));
        append_fan(f, r.quads, range(i + j, hi - j));
        std::vector<int> poly{0};
        for (int p = i; p <= i + j - 1; ++p) poly.push_back(p);
        for (int p = hi - j; p <= hi; ++p) poly.push_back(p);
        append_fan(f, r.quads, poly);
        r.forbidden_plus = {left};
        break;
      }
      case EvenMinusCase::RightBelowLater: {
        const int j = jr;
        r.lemma_j = j;
        assertion_holds = f.above(i + j, hi + 1 - j, right);
        r.quads.push_back(frame_quad(f, right, hi - j, i + j, hi + 1 - j));
        append_fan(f, r.quads, range(i + j, hi - j));
        std::vector<int> poly{0};
        for (int p = i; p <= i + j; ++p) poly.push_back(p);
        for (int p = hi + 1 - j; p <= hi; ++p) poly.push_back(p);
        append_fan(f, r.quads, poly);
        r.forbidden_plus = {right};
        break;
      }
      case EvenMinusCase::AboveAll:
        r.quads.push_back(frame_quad(f, left, right, i + k + 1, i + k));
        append_fan(f, r.quads, range(i, hi));
        r.forbidden_plus = {left, right};
        break;
    }
  } catch (const ContradictionError&) {
    assertion_holds = false;
  }

  if (assertion_holds && verify_quads(f.points(), r.quads).ok() && static_cast<int>(r.quads.size()) == k + 1) {
    set_caps(f, r);
    return r;
  }

  // Exhaustive over the consumed points. Points outside the wedge
  // C(p_0; p_{i-1}, p_{i+2k+2}) cannot lie inside a hole of these.
  std::vector<int> consumed{0};
  for (int p = left; p <= right; ++p) consumed.push_back(p);
  const PointSet sub = f.points().subset(consumed);
  const auto found = find_compatible(enumerate_4holes(sub), k + 1);
  if (!found) throw ContradictionError("even-minus fallback found fewer than k+1 compatible holes");
  r.quads.clear();
  for (const QuadHole& q : *found)
    r.quads.push_back(frame_quad(f, consumed[static_cast<std::size_t>(q.v[0])], consumed[static_cast<std::size_t>(q.v[1])],
                                 consumed[static_cast<std::size_t>(q.v[2])], consumed[static_cast<std::size_t>(q.v[3])]));
  r.fell_back = true;
  // Nothing is known about where the exhaustive quads sit, so both outer
  // points are off limits for either observation.
  r.forbidden_minus = {left, right};
  r.forbidden_plus = {left, right};
  set_caps(f, r);
  return r;
}

std::array<QuadHole, 2> quads_six_set(const PointSet& six) {
  if (six.size() != 6) throw PreconditionError("six-set construction needs exactly six points");
  const std::vector<int> hull = convex_hull(six);
  const auto h = [&](int t) { return hull[static_cast<std::size_t>(t % static_cast<int>(hull.size()))]; };
  const auto quad = [&](int a, int b, int c, int d) {
    const auto q = make_quad(six, {a, b, c, d});
    if (!q) throw ContradictionError("six-set construction produced a non-convex quad");
    return *q;
  };
  if (hull.size() == 6) return {quad(h(0), h(1), h(2), h(3)), quad(h(3), h(4), h(5), h(0))};
  if (hull.size() != 5) throw PreconditionError("six-set construction needs at least five hull vertices");

  int inner = 0;
  while (std::find(hull.begin(), hull.end(), inner) != hull.end()) ++inner;
  const Point& p = six[inner];
  for (int t = 0; t < 5; ++t) {
    const Point &a = six[h(t)], &b = six[h(t + 1)], &c = six[h(t + 3)];
    const int s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
    if (s1 == s2 && s2 == s3)
      return {quad(inner, h(t + 1), h(t + 2), h(t + 3)), quad(inner, h(t + 3), h(t + 4), h(t))};
  }
  throw ContradictionError("interior point of a pentagon is in none of its five diagonal triangles");
}

std::array<QuadHole, 2> quads_six_set(const PointSet& s, std::array<int, 6> idx) {
  const PointSet six = s.subset(idx);
  auto local = quads_six_set(six);
  std::array<QuadHole, 2> out;
  for (std::size_t t = 0; t < 2; ++t) {
    std::array<int, 4> v{};
    for (std::size_t c = 0; c < 4; ++c) v[c] = idx[static_cast<std::size_t>(local[t].v[c])];
    out[t] = *make_quad(s, v);
  }
  return out;
}

std::vector<QuadHole> cone_partition_solver(const PointSet& s, int group) {
  if (group != 3 && group != 5) throw PreconditionError("cone partition group must be 3 or 5");
  const int wedge = group + 2;
  if (s.size() < wedge) throw PreconditionError("too few points for the cone partition");
  const RadialOrder r = radial_order(s);
  const int n = s.size();
  std::vector<QuadHole> out;
  // Cone t spans p_{group*t+1} .. p_{group*t+group+1}; consecutive cones
  // share their boundary point.
  for (int start = 1; start + group <= n - 1; start += group) {
    std::vector<int> idx{r.origin};
    for (int p = start; p <= start + group; ++p) idx.push_back(r.at(p));
    const PointSet sub = s.subset(idx);
    const SmallSolution local = group == 3 ? solve5(sub) : solve7(sub);
    for (const QuadHole& q : local.quads) {
      std::array<int, 4> v{};
      for (std::size_t c = 0; c < 4; ++c) v[c] = idx[static_cast<std::size_t>(q.v[c])];
      out.push_back(*make_quad(s, v));
    }
  }
  return out;
}

bool avoids_cap(const RadialFrame& f, const QuadHole& q, bool front) {
  const int n = f.size();
  if (n < 3) return true;
  const Point& o = f[0];
  const Point& a = front ? f[1] : f[n - 2];
  const Point& b = front ? f[2] : f[n - 1];
  const auto poly = quad_points(f.points(), q);

  // Separating lines through the region's own boundary.
  const auto all_weakly = [&](auto&& pred) { return std::all_of(poly.begin(), poly.end(), pred); };
  const int o_side = orient(a, b, o);
  if (all_weakly([&](const Point& p) { return orient(a, b, p) != -o_side; })) return true;
  const int b_side = orient(o, a, b);
  if (all_weakly([&](const Point& p) { return orient(o, a, p) != b_side; })) return true;
  const int a_side = orient(o, b, a);
  if (all_weakly([&](const Point& p) { return orient(o, b, p) != a_side; })) return true;

  // Separating lines through a quad edge: the region's corners and its two
  // recession directions must stay weakly outside.
  const Point da = minus(a, o), db = minus(b, o);
  for (std::size_t e = 0; e < 4; ++e) {
    const Point& u = poly[e];
    const Point& v = poly[(e + 1) % 4];
    const Point dir = minus(v, u);
    if (orient(u, v, a) <= 0 && orient(u, v, b) <= 0 && cross_sign(dir, da) <= 0 && cross_sign(dir, db) <= 0)
      return true;
  }
  return false;
}

}  // namespace quadholes
