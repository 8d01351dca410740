#include <map>

#include <gtest/gtest.h>

#include "quadholes/constructions.hpp"
#include "quadholes/errors.hpp"
#include "quadholes/generate.hpp"
#include "quadholes/oracle.hpp"
#include "support.hpp"

using namespace quadholes;

namespace {

bool has_run(const RadialFrame& f, char sign, int start, int length) {
  for (int p = start; p < start + length; ++p)
    if (p < 2 || p > f.size() - 2 || f.sign(p) != sign) return false;
  return true;
}

// A maximal-or-not run of `length` equal signs, as (start) in frame f.
std::optional<int> find_run(const RadialFrame& f, char sign, int length) {
  for (int start = 2; start + length - 1 <= f.size() - 2; ++start)
    if (has_run(f, sign, start, length)) return start;
  return std::nullopt;
}

void expect_certified(const RadialFrame& f, const std::vector<QuadHole>& quads) {
  const Verdict v = verify_solution(f.points(), quads);
  EXPECT_TRUE(v.ok()) << v.message;
  for (const QuadHole& q : quads) EXPECT_TRUE(support::naive_hole(f.points(), q.v));
}

}  // namespace

TEST(PlusRun, LengthFourGivesTwoQuads) {
  const auto f = support::find_frame(10, [](const RadialFrame& g) { return has_run(g, '+', 4, 4); });
  ASSERT_TRUE(f);
  const ConstructionResult r = quads_from_plus_run(*f, 4, 7);
  EXPECT_EQ(r.quads.size(), 2u);
  EXPECT_EQ(r.first, 3);
  EXPECT_EQ(r.last, 8);
  expect_certified(*f, r.quads);
}

TEST(PlusRun, LengthTwoGivesOneQuad) {
  const auto f = support::find_frame(9, [](const RadialFrame& g) { return find_run(g, '+', 2).has_value(); });
  ASSERT_TRUE(f);
  const int i = *find_run(*f, '+', 2);
  const ConstructionResult r = quads_from_plus_run(*f, i, i + 1);
  ASSERT_EQ(r.quads.size(), 1u);
  EXPECT_EQ(r.quads[0], frame_quad(*f, i - 1, i, i + 1, i + 2));
  expect_certified(*f, r.quads);
}

TEST(PlusRun, LengthSixOnAConcaveChain) {
  // Points on an upward parabola seen from below: every inner point lies
  // below the chord of its neighbours.
  std::vector<Point> pts{{0, 0}};
  for (std::int64_t x = -4; x <= 3; ++x) pts.push_back({x, 1000 + 10 * x * x});
  const RadialFrame f{PointSet(pts)};
  ASSERT_EQ(f.signature().word(), "++++++");
  const ConstructionResult r = quads_from_plus_run(f, 2, 7);
  EXPECT_EQ(r.quads.size(), 3u);
  expect_certified(f, r.quads);
}

TEST(PlusRun, RejectsBadRuns) {
  const RadialFrame convex(generate(GenKind::Convex, 8, 1));
  EXPECT_THROW(quads_from_plus_run(convex, 2, 3), PreconditionError);
  EXPECT_THROW(quads_from_minus_run(convex, 2, 3), PreconditionError);
  EXPECT_THROW(quads_from_minus_run(convex, 1, 1), PreconditionError);
}

TEST(MinusRun, SingleMinusIsTheObviousQuad) {
  const RadialFrame f(generate(GenKind::Convex, 7, 2));
  const ConstructionResult r = quads_from_minus_run(f, 3, 3);
  ASSERT_EQ(r.quads.size(), 1u);
  EXPECT_EQ(r.quads[0], frame_quad(f, 0, 2, 3, 4));
}

TEST(MinusRun, LengthFiveGivesThreeQuads) {
  const auto f = support::find_frame(10, [](const RadialFrame& g) { return find_run(g, '-', 5).has_value(); });
  ASSERT_TRUE(f);
  const int i = *find_run(*f, '-', 5);
  const ConstructionResult r = quads_from_minus_run(*f, i, i + 4);
  EXPECT_EQ(r.quads.size(), 3u);
  expect_certified(*f, r.quads);
}

TEST(MinusRun, ConvexPositionMatchesTheOracle) {
  for (int n = 4; n <= 10; n += 2) {
    const RadialFrame f(generate(GenKind::Convex, n, static_cast<std::uint64_t>(n)));
    const ConstructionResult r = quads_from_minus_run(f, 2, n - 2);
    EXPECT_EQ(static_cast<int>(r.quads.size()), (n - 2) / 2);
    EXPECT_EQ(max_compatible(f.points()).count, n / 2 - 1);
    expect_certified(f, r.quads);
  }
}

TEST(EvenMinus, LeftBelowFirstUsesTheOuterQuad) {
  const auto f = support::find_frame(9, [](const RadialFrame& g) {
    return has_run(g, '-', 4, 2) && g.below(3, 6, 2);  // p_{i-1} below l_i for i = 3
  });
  ASSERT_TRUE(f);
  const ConstructionResult r = quads_even_minus(*f, 3, 1);
  ASSERT_EQ(r.lemma_case, EvenMinusCase::LeftBelowFirst);
  EXPECT_FALSE(r.fell_back);
  ASSERT_EQ(r.quads.size(), 2u);
  EXPECT_EQ(r.quads[0], frame_quad(*f, 0, 2, 3, 6));
  EXPECT_EQ(r.forbidden_minus, std::vector<int>{2});
  expect_certified(*f, r.quads);
}

TEST(EvenMinus, SixMinusesBetweenPlusesGiveFour) {
  const auto f = support::find_frame(11, [](const RadialFrame& g) { return g.signature().word() == "+------+"; });
  ASSERT_TRUE(f);
  const ConstructionResult r = quads_even_minus(*f, 2, 3);
  EXPECT_EQ(r.quads.size(), 4u);
  expect_certified(*f, r.quads);
}

TEST(EvenMinus, PlusMinusMinusPlusPrefixOfNine) {
  const auto f = support::find_frame(9, [](const RadialFrame& g) { return g.signature().word() == "+--+++"; });
  ASSERT_TRUE(f);
  const ConstructionResult r = quads_even_minus(*f, 2, 1);
  EXPECT_EQ(r.quads.size(), 2u);
  EXPECT_EQ(r.first, 1);
  EXPECT_EQ(r.last, 6);
  expect_certified(*f, r.quads);
  // Everything sits inside the wedge p_0 .. p_6, where the oracle agrees two fit.
  EXPECT_GE(max_compatible(f->prefix(7).points()).count, 2);
}

TEST(EvenMinus, EveryCaseOnRandomFramesIsCertified) {
  std::map<EvenMinusCase, int> seen;
  int fallbacks = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 6000; ++seed) {
    const RadialFrame f(support::random_set(14, seed, 1 << 14));
    for (int k = 1; k <= 3; ++k)
      for (int i = 2; i + 2 * k + 2 <= f.size() - 1; ++i) {
        if (!has_run(f, '-', i + 1, 2 * k)) continue;
        for (Side side : {Side::Left, Side::Right}) {
          const ConstructionResult r = quads_even_minus(f, i, k, side);
          ++total;
          ASSERT_EQ(static_cast<int>(r.quads.size()), k + 1);
          ASSERT_TRUE(verify_quads(f.points(), r.quads).ok()) << "seed " << seed;
          fallbacks += r.fell_back;
          if (!r.fell_back) ++seen[*r.lemma_case];
          for (const QuadHole& q : r.quads)
            for (int v : q.v) ASSERT_TRUE(v == 0 || (v >= r.first && v <= r.last));
          const std::vector<int> both{i - 1, i + 2 * k + 2};
          if (r.fell_back) {
            EXPECT_EQ(r.forbidden_minus, both);
            EXPECT_EQ(r.forbidden_plus, both);
            continue;
          }
          switch (*r.lemma_case) {
            case EvenMinusCase::LeftBelowFirst: EXPECT_EQ(r.forbidden_minus, std::vector<int>{i - 1}); break;
            case EvenMinusCase::RightBelowFirst: EXPECT_EQ(r.forbidden_minus, std::vector<int>{i + 2 * k + 2}); break;
            case EvenMinusCase::LeftBelowLater: EXPECT_EQ(r.forbidden_plus, std::vector<int>{i - 1}); break;
            case EvenMinusCase::RightBelowLater: EXPECT_EQ(r.forbidden_plus, std::vector<int>{i + 2 * k + 2}); break;
            case EvenMinusCase::AboveAll: EXPECT_EQ(r.forbidden_plus, both); break;
          }
        }
      }
  }
  EXPECT_GT(total, 1000);
  EXPECT_EQ(seen.size(), 5u);
  // The "later line" assertion is checked rather than proved; it has held on
  // every sampled frame so far.
  EXPECT_LE(fallbacks * 1000, total);
}

TEST(SixSet, ConvexHexagonSplitsAlongADiagonal) {
  const PointSet hex({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
  const auto two = quads_six_set(hex);
  const Verdict v = verify_solution(hex, {two.begin(), two.end()});
  EXPECT_TRUE(v.ok()) << v.message;
  int shared = 0;
  for (int a : two[0].v) shared += std::count(two[1].v.begin(), two[1].v.end(), a);
  EXPECT_EQ(shared, 2);
}

TEST(SixSet, PentagonWithInteriorPoint) {
  const PointSet s({{0, 0}, {4, 0}, {6, 3}, {2, 6}, {-2, 3}, {2, 2}});
  const auto two = quads_six_set(s);
  EXPECT_TRUE(verify_solution(s, {two.begin(), two.end()}).ok());
  for (const QuadHole& q : two) EXPECT_NE(std::find(q.v.begin(), q.v.end(), 5), q.v.end());
}

TEST(SixSet, RandomQualifyingSets) {
  int tested = 0;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    const PointSet s = support::random_set(6, seed);
    if (convex_hull(s).size() < 5) {
      EXPECT_THROW(quads_six_set(s), PreconditionError);
      continue;
    }
    const auto two = quads_six_set(s);
    ASSERT_TRUE(verify_solution(s, {two.begin(), two.end()}).ok()) << "seed " << seed;
    ++tested;
  }
  EXPECT_GT(tested, 500);
}

TEST(ConePartition, Examples) {
  const PointSet s17 = support::random_set(17, 3);
  EXPECT_EQ(cone_partition_solver(s17, 3).size(), 5u);
  EXPECT_EQ(cone_partition_solver(s17, 5).size(), 6u);
  EXPECT_EQ(cone_partition_solver(support::random_set(7, 3), 5).size(), 2u);
  EXPECT_THROW(cone_partition_solver(s17, 4), PreconditionError);
}

TEST(ConePartition, FormulaCountsAreCertified) {
  for (int n = 10; n <= 50; ++n) {
    const PointSet s = support::random_set(n, static_cast<std::uint64_t>(100 + n));
    const auto three = cone_partition_solver(s, 3);
    const auto five = cone_partition_solver(s, 5);
    EXPECT_EQ(static_cast<int>(three.size()), (n - 2) / 3);
    EXPECT_EQ(static_cast<int>(five.size()), 2 * ((n - 2) / 5));
    EXPECT_TRUE(verify_solution(s, three).ok());
    EXPECT_TRUE(verify_solution(s, five).ok());
  }
}

TEST(PartitionConvexPolygon, FansFromTheFirstVertex) {
  const PointSet oct = generate(GenKind::Convex, 8, 5);
  const std::vector<int> hull = convex_hull(oct);
  const auto quads = partition_convex_polygon(oct, hull);
  ASSERT_EQ(quads.size(), 3u);
  for (const QuadHole& q : quads) EXPECT_NE(std::find(q.v.begin(), q.v.end(), hull[0]), q.v.end());
  EXPECT_TRUE(verify_solution(oct, quads).ok());
  const std::vector<int> odd(hull.begin(), hull.begin() + 5);
  EXPECT_THROW(partition_convex_polygon(oct, odd), PreconditionError);
}

TEST(AvoidsCap, MatchesExactOverlapWithATruncatedCap) {
  int clear = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const RadialFrame f(support::random_set(9, seed, 1 << 10));
    const int n = f.size();
    for (bool front : {true, false}) {
      const Point o = f[0];
      const Point a = front ? f[1] : f[n - 2];
      const Point b = front ? f[2] : f[n - 1];
      // The cap truncated far beyond every point: a, b, b + M(b - o), a + M(a - o).
      const std::int64_t M = 1 << 12;
      std::vector<Point> cap{a, b, {b.x + M * (b.x - o.x), b.y + M * (b.y - o.y)},
                             {a.x + M * (a.x - o.x), a.y + M * (a.y - o.y)}};
      if (support::big_orient(cap[0], cap[1], cap[2]) < 0) std::reverse(cap.begin(), cap.end());
      for (const QuadHole& q : enumerate_4holes(f.points()).holes) {
        const auto p = quad_points(f.points(), q);
        const bool expect = support::overlap_area({p.begin(), p.end()}, cap) == 0;
        ASSERT_EQ(avoids_cap(f, q, front), expect) << "seed " << seed;
        clear += expect;
        ++total;
      }
    }
  }
  EXPECT_GT(clear, total / 4);
  EXPECT_LT(clear, total);
}
