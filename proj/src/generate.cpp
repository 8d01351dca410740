#include "quadholes/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

constexpr int kMaxRepairs = 10000;

// Replaces degenerate points until the set is in general position. `draw`
// produces a fresh candidate for the given slot.
template <typename Draw>
PointSet repair(std::vector<Point> pts, Draw&& draw) {
  for (int round = 0; round < kMaxRepairs; ++round) {
    PointSet s(pts);
    const auto bad = find_degeneracy(s);
    if (!bad) return s;
    const int victim = std::max({(*bad)[0], (*bad)[1], (*bad)[2]});
    pts[static_cast<std::size_t>(victim)] = draw(victim);
  }
  throw PreconditionError("bounding box too small to place the points in general position");
}

PointSet convex_set(int n, std::mt19937_64& rng, std::int64_t bbox) {
  const double radius = static_cast<double>(bbox - 1) / 2.0;
  const double centre = radius;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int candidates = 4 * n + 16; candidates <= 64 * n + 1024; candidates *= 2) {
    std::set<Point> unique;
    for (int i = 0; i < candidates; ++i) {
      const double t = angle(rng);
      unique.insert({static_cast<std::int64_t>(std::llround(centre + radius * std::cos(t))),
                     static_cast<std::int64_t>(std::llround(centre + radius * std::sin(t)))});
    }
    const PointSet pool(std::vector<Point>(unique.begin(), unique.end()));
    std::vector<int> hull = convex_hull(pool);  // strict: collinear points dropped
    if (static_cast<int>(hull.size()) < n) continue;
    std::shuffle(hull.begin(), hull.end(), rng);
    hull.resize(static_cast<std::size_t>(n));
    std::sort(hull.begin(), hull.end());
    std::vector<Point> pts;
    for (int i : hull) pts.push_back(pool[i]);
    std::shuffle(pts.begin(), pts.end(), rng);
    return PointSet(std::move(pts));
  }
  throw PreconditionError("bounding box too small for " + std::to_string(n) + " points in convex position");
}

}  // namespace

std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::Random: return "random";
    case GenKind::Convex: return "convex";
    case GenKind::Clustered: return "clustered";
  }
  return "unknown";
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "random") return GenKind::Random;
  if (name == "convex") return GenKind::Convex;
  if (name == "clustered") return GenKind::Clustered;
  throw PreconditionError("unknown generator kind '" + std::string(name) + "'");
}

PointSet generate(GenKind kind, int n, std::uint64_t seed, std::int64_t bbox) {
  if (n < 3) throw PreconditionError("generators need n >= 3");
  if (bbox < 4 || bbox > kCoordLimit) throw PreconditionError("bbox must lie in [4, 2^30]");
  std::mt19937_64 rng(seed);

  switch (kind) {
    case GenKind::Random: {
      std::uniform_int_distribution<std::int64_t> coord(0, bbox - 1);
      const auto draw = [&](int) { return Point{coord(rng), coord(rng)}; };
      std::vector<Point> pts;
      for (int i = 0; i < n; ++i) pts.push_back(draw(i));
      return repair(std::move(pts), draw);
    }
    case GenKind::Convex:
      return convex_set(n, rng, bbox);
    case GenKind::Clustered: {
      // Left cluster in the first third of the box, right cluster in the last.
      const std::int64_t third = std::max<std::int64_t>(bbox / 3, 1);
      std::uniform_int_distribution<std::int64_t> left(0, third - 1), right(bbox - third, bbox - 1), y(0, bbox - 1);
      const int n_left = n / 2;
      const auto draw = [&](int slot) { return Point{slot < n_left ? left(rng) : right(rng), y(rng)}; };
      std::vector<Point> pts;
      for (int i = 0; i < n; ++i) pts.push_back(draw(i));
      return repair(std::move(pts), draw);
    }
  }
  throw PreconditionError("unknown generator kind");
}

}  // namespace quadholes
