#include "quadholes/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

int lowest(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(b[w])));
  return -1;
}

void reset(Bits& b, int v) { b[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Maximum clique in the compatibility graph with greedy-coloring bounds.
class CliqueSearch {
 public:
  CliqueSearch(const HoleCatalog& c, std::size_t target) : target_(target) {
    const int n = c.size();
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n), Bits(words_, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!c.conflicts(a, b)) adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    n_ = n;
  }

  void seed(std::vector<int> clique) { best_ = std::move(clique); }

  std::vector<int> run() {
    if (n_ == 0 || best_.size() >= target_) return best_;
    Bits all(words_, 0);
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    expand(all);
    return best_;
  }

 private:
  void expand(Bits p) {
    std::vector<int> order;
    std::vector<int> color;
    Bits uncolored = p;
    int k = 0;
    while (any(uncolored)) {
      ++k;
      Bits q = uncolored;
      while (any(q)) {
        const int v = lowest(q);
        reset(q, v);
        reset(uncolored, v);
        const Bits& nv = adj_[static_cast<std::size_t>(v)];
        for (std::size_t w = 0; w < words_; ++w) q[w] &= ~nv[w];
        order.push_back(v);
        color.push_back(k);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (done_ || current_.size() + static_cast<std::size_t>(color[idx]) <= best_.size()) return;
      const int v = order[idx];
      current_.push_back(v);
      Bits next(words_);
      const Bits& nv = adj_[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & nv[w];
      if (!any(next)) {
        if (current_.size() > best_.size()) {
          best_ = current_;
          if (best_.size() >= target_) done_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      reset(p, v);
    }
  }

  std::size_t target_;
  std::size_t words_ = 0;
  int n_ = 0;
  std::vector<Bits> adj_;
  std::vector<int> best_;
  std::vector<int> current_;
  bool done_ = false;
};

std::vector<int> greedy_indices(const HoleCatalog& c) {
  std::vector<int> chosen;
  for (int h = 0; h < c.size(); ++h)
    if (std::none_of(chosen.begin(), chosen.end(), [&](int g) { return c.conflicts(g, h); }))
      chosen.push_back(h);
  return chosen;
}

std::vector<QuadHole> pick(const HoleCatalog& c, const std::vector<int>& idx) {
  std::vector<QuadHole> out;
  for (int i : idx) out.push_back(c.holes[static_cast<std::size_t>(i)]);
  return out;
}

std::string quad_text(const QuadHole& q) {
  return "[" + std::to_string(q.v[0]) + " " + std::to_string(q.v[1]) + " " + std::to_string(q.v[2]) +
         " " + std::to_string(q.v[3]) + "]";
}

}  // namespace

HoleCatalog enumerate_4holes(const PointSet& s) {
  HoleCatalog c;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d)
        for (int e = d + 1; e < n; ++e)
          if (quad_is_hole(s, {a, b, d, e})) c.holes.push_back(*make_quad(s, {a, b, d, e}));

  const std::size_t h = c.holes.size();
  const std::size_t words = (h + 63) / 64;
  c.conflict.assign(h, Bits(words, 0));
  for (std::size_t i = 0; i < h; ++i) {
    c.conflict[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t j = i + 1; j < h; ++j)
      if (!quads_compatible(s, c.holes[i], c.holes[j])) {
        c.conflict[i][j / 64] |= std::uint64_t{1} << (j % 64);
        c.conflict[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
  }
  return c;
}

MaxCompatible max_compatible(const HoleCatalog& catalog, OracleLimits limits) {
  if (catalog.size() > limits.max_holes)
    throw CapExceededError("catalog has " + std::to_string(catalog.size()) + " holes, cap is " +
                           std::to_string(limits.max_holes) + "; use the greedy lower bound instead");
  CliqueSearch search(catalog, static_cast<std::size_t>(catalog.size()) + 1);
  search.seed(greedy_indices(catalog));
  const std::vector<int> best = search.run();
  return {static_cast<int>(best.size()), pick(catalog, best)};
}

MaxCompatible max_compatible(const PointSet& s, OracleLimits limits) {
  if (s.size() > limits.max_points)
    throw CapExceededError("exact oracle is capped at n <= " + std::to_string(limits.max_points));
  return max_compatible(enumerate_4holes(s), limits);
}

std::optional<std::vector<QuadHole>> find_compatible(const HoleCatalog& catalog, int k) {
  if (k <= 0) return std::vector<QuadHole>{};
  std::vector<int> greedy = greedy_indices(catalog);
  if (static_cast<int>(greedy.size()) >= k) {
    greedy.resize(static_cast<std::size_t>(k));
    return pick(catalog, greedy);
  }
  CliqueSearch search(catalog, static_cast<std::size_t>(k));
  std::vector<int> best = search.run();
  if (static_cast<int>(best.size()) < k) return std::nullopt;
  best.resize(static_cast<std::size_t>(k));
  return pick(catalog, best);
}

std::vector<QuadHole> greedy_compatible(const HoleCatalog& catalog) {
  return pick(catalog, greedy_indices(catalog));
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Ok: return "ok";
    case Verdict::Kind::Degenerate: return "degenerate";
    case Verdict::Kind::BadIndex: return "bad-index";
    case Verdict::Kind::NotConvex: return "not-convex";
    case Verdict::Kind::NotEmpty: return "not-empty";
    case Verdict::Kind::Overlap: return "overlap";
  }
  return "unknown";
}

Verdict verify_quads(const PointSet& s, std::span<const QuadHole> quads) {
  const int n = s.size();
  std::vector<std::array<Point, 4>> polys;
  polys.reserve(quads.size());

  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    const QuadHole& q = quads[qi];
    for (int v : q.v)
      if (v < 0 || v >= n)
        return {Verdict::Kind::BadIndex, "quad " + std::to_string(qi) + " " + quad_text(q) + " has index out of range",
                {static_cast<int>(qi)}};
    std::array<int, 4> sorted = q.v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return {Verdict::Kind::BadIndex, "quad " + std::to_string(qi) + " " + quad_text(q) + " repeats a vertex",
              {static_cast<int>(qi)}};
    const auto norm = make_quad(s, q.v);
    if (!norm)
      return {Verdict::Kind::NotConvex, "quad " + std::to_string(qi) + " " + quad_text(q) + " is not in convex position",
              {static_cast<int>(qi)}};
    polys.push_back(quad_points(s, *norm));
  }

  // Emptiness: only points inside a quad's x-extent can be inside it.
  std::vector<int> by_x(static_cast<std::size_t>(n));
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return s[a].x < s[b].x; });
  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    const auto& poly = polys[qi];
    auto [lo, hi] = std::minmax({poly[0].x, poly[1].x, poly[2].x, poly[3].x});
    auto first = std::lower_bound(by_x.begin(), by_x.end(), lo, [&](int i, std::int64_t x) { return s[i].x < x; });
    for (auto it = first; it != by_x.end() && s[*it].x <= hi; ++it) {
      const int p = *it;
      if (p == quads[qi].v[0] || p == quads[qi].v[1] || p == quads[qi].v[2] || p == quads[qi].v[3]) continue;
      if (strictly_inside_convex(poly, s[p]))
        return {Verdict::Kind::NotEmpty,
                "quad " + std::to_string(qi) + " " + quad_text(quads[qi]) + " contains point " + std::to_string(p),
                {static_cast<int>(qi), p}};
    }
  }

  // Pairwise compatibility, restricted to quads whose bounding boxes meet.
  struct Box {
    std::int64_t x0, x1, y0, y1;
    std::size_t q;
  };
  std::vector<Box> boxes;
  boxes.reserve(quads.size());
  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    const auto& p = polys[qi];
    auto [x0, x1] = std::minmax({p[0].x, p[1].x, p[2].x, p[3].x});
    auto [y0, y1] = std::minmax({p[0].y, p[1].y, p[2].y, p[3].y});
    boxes.push_back({x0, x1, y0, y1, qi});
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.x0 != b.x0 ? a.x0 < b.x0 : a.q < b.q; });
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  for (std::size_t a = 0; a < boxes.size(); ++a) {
    for (std::size_t b = a + 1; b < boxes.size() && boxes[b].x0 <= boxes[a].x1; ++b) {
      if (boxes[b].y0 > boxes[a].y1 || boxes[a].y0 > boxes[b].y1) continue;
      if (!interiors_disjoint_naive(polys[boxes[a].q], polys[boxes[b].q])) {
        const std::pair<std::size_t, std::size_t> pair{std::min(boxes[a].q, boxes[b].q), std::max(boxes[a].q, boxes[b].q)};
        if (!worst || pair < *worst) worst = pair;
      }
    }
  }
  if (worst) {
    const auto [i, j] = *worst;
    return {Verdict::Kind::Overlap,
            "quads " + std::to_string(i) + " " + quad_text(quads[i]) + " and " + std::to_string(j) + " " +
                quad_text(quads[j]) + " overlap",
            {static_cast<int>(i), static_cast<int>(j)}};
  }
  return {};
}

Verdict verify_solution(const PointSet& s, std::span<const QuadHole> quads) {
  if (auto bad = find_degeneracy(s)) {
    std::vector<int> where{(*bad)[0], (*bad)[1]};
    if ((*bad)[2] >= 0) where.push_back((*bad)[2]);
    return {Verdict::Kind::Degenerate, (*bad)[2] < 0 ? "input has duplicate points" : "input has a collinear triple",
            where};
  }
  return verify_quads(s, quads);
}

}  // namespace quadholes
