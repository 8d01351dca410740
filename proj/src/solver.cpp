#include "quadholes/solver.hpp"

#include <algorithm>

#include "quadholes/errors.hpp"
#include "quadholes/oracle.hpp"
#include "quadholes/partition.hpp"
#include "quadholes/small_solvers.hpp"

namespace quadholes {

namespace {

int base_size(int n) {
  for (int b : {11, 9, 7, 5})
    if (b <= n) return b;
  return 0;
}

// Solves the subset `idx` of `s` with the small solver for `size` points on
// its wedge prefix; appends quads in indices of `s`.
TraceEntry solve_base(const PointSet& s, const std::vector<int>& idx, int size, int depth,
                      std::vector<QuadHole>& out) {
  const PointSet sub = s.subset(idx);
  const std::vector<int> wedge = wedge_indices(sub, size);
  const PointSet reduced = sub.subset(wedge);
  SmallSolution sol;
  switch (size) {
    case 5: sol = solve5(reduced); break;
    case 7: sol = solve7(reduced); break;
    case 9: sol = solve9(reduced); break;
    default: sol = solve11(reduced); break;
  }
  for (const QuadHole& q : sol.quads) {
    std::array<int, 4> v{};
    for (std::size_t c = 0; c < 4; ++c)
      v[c] = idx[static_cast<std::size_t>(wedge[static_cast<std::size_t>(q.v[c])])];
    out.push_back(*make_quad(s, v));
  }
  return {depth, static_cast<int>(idx.size()), "base", std::to_string(size) + "-point " + sol.method,
          static_cast<int>(sol.quads.size()), sol.fell_back};
}

std::vector<int> lift(const std::vector<int>& idx, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int i : local) out.push_back(idx[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

int lower_bound_formula(int n) { return n < 0 ? 0 : std::max(0, 5 * n / 11 - 1); }

Solution solve(const PointSet& s) {
  const int n = s.size();
  if (n < 3) throw PreconditionError("solve needs at least 3 points");
  require_general_position(s);

  Solution sol;
  sol.floor = lower_bound_formula(n);

  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;

  for (int depth = 0;; ++depth) {
    const int m = static_cast<int>(idx.size());
    if (m <= 4) {
      sol.trace.push_back({depth, m, "empty", "fewer than five points", 0, false});
      break;
    }
    if (m <= 13) {
      sol.trace.push_back(solve_base(s, idx, base_size(m), depth, sol.quads));
      break;
    }
    const PointSet sub = s.subset(idx);
    const int r = m == 14 ? 7 : m - 11;
    const int a = m == 14 ? 7 : 11;
    const GoodSplit g = good_split(sub, r, a);
    const std::vector<int> side_a = lift(idx, g.side_a);
    std::vector<int> side_b = lift(idx, g.side_b);
    std::array<int, 4> bridge{};
    for (std::size_t c = 0; c < 4; ++c) bridge[c] = idx[static_cast<std::size_t>(g.bridge.v[c])];
    sol.quads.push_back(*make_quad(s, bridge));
    sol.trace.push_back({depth, m, "split", "r=" + std::to_string(r) + " s=" + std::to_string(a) + " " + g.method, 1,
                         g.fell_back});
    sol.trace.push_back(solve_base(s, side_a, a, depth + 1, sol.quads));
    if (m == 14) {
      sol.trace.push_back(solve_base(s, side_b, 7, depth + 1, sol.quads));
      break;
    }
    idx = std::move(side_b);
  }

  const Verdict v = verify_quads(s, sol.quads);
  if (!v.ok()) throw ContradictionError("pooled solution failed verification: " + v.message);
  if (static_cast<int>(sol.quads.size()) < sol.floor)
    throw ContradictionError("pooled solution has " + std::to_string(sol.quads.size()) + " quads, below the floor " +
                             std::to_string(sol.floor));
  return sol;
}

}  // namespace quadholes
