// Python bindings. Point sets cross the boundary as lists of (x, y) integer
// pairs, quads as 4-tuples of indices.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadholes/errors.hpp"
#include "quadholes/generate.hpp"
#include "quadholes/io.hpp"
#include "quadholes/oracle.hpp"
#include "quadholes/partition.hpp"
#include "quadholes/radial.hpp"
#include "quadholes/small_solvers.hpp"
#include "quadholes/solver.hpp"

namespace py = pybind11;
namespace qh = quadholes;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;
using Quad = std::array<int, 4>;

qh::PointSet to_set(const std::vector<Pair>& pts) {
  std::vector<qh::Point> out;
  out.reserve(pts.size());
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return qh::PointSet(std::move(out));
}

std::vector<Pair> from_set(const qh::PointSet& s) {
  std::vector<Pair> out;
  for (const qh::Point& p : s.points()) out.emplace_back(p.x, p.y);
  return out;
}

std::vector<Quad> quads_out(const std::vector<qh::QuadHole>& qs) {
  std::vector<Quad> out;
  for (const qh::QuadHole& q : qs) out.push_back(q.v);
  return out;
}

std::vector<qh::QuadHole> quads_in(const std::vector<Quad>& qs) {
  std::vector<qh::QuadHole> out;
  for (const Quad& q : qs) out.push_back(qh::QuadHole{q});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compatible 4-holes in planar point sets";

  auto base = py::register_exception<qh::Error>(m, "Error");
  py::register_exception<qh::CoordinateRangeError>(m, "CoordinateRangeError", base.ptr());
  py::register_exception<qh::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<qh::ContradictionError>(m, "ContradictionError", base.ptr());
  py::register_exception<qh::CapExceededError>(m, "CapExceededError", base.ptr());
  py::register_exception<qh::ParseError>(m, "ParseError", base.ptr());

  m.def("lower_bound", &qh::lower_bound_formula, py::arg("n"));

  m.def(
      "solve",
      [](const std::vector<Pair>& pts) {
        const qh::Solution sol = qh::solve(to_set(pts));
        py::list trace;
        for (const qh::TraceEntry& e : sol.trace) trace.append(qh::format_trace(e));
        py::dict d;
        d["quads"] = quads_out(sol.quads);
        d["floor"] = sol.floor;
        d["trace"] = trace;
        return d;
      },
      py::arg("points"), "Compatible 4-holes, at least lower_bound(n) of them.");

  m.def(
      "solve_small",
      [](const std::vector<Pair>& pts) {
        const qh::PointSet s = to_set(pts);
        qh::SmallSolution r;
        switch (s.size()) {
          case 5: r = qh::solve5(s); break;
          case 7: r = qh::solve7(s); break;
          case 9: r = qh::solve9(s); break;
          case 11: r = qh::solve11(s); break;
          default: throw qh::PreconditionError("solve_small takes 5, 7, 9 or 11 points");
        }
        py::dict d;
        d["quads"] = quads_out(r.quads);
        d["method"] = r.method;
        d["fell_back"] = r.fell_back;
        return d;
      },
      py::arg("points"));

  m.def(
      "verify",
      [](const std::vector<Pair>& pts, const std::vector<Quad>& quads) {
        const qh::Verdict v = qh::verify_solution(to_set(pts), quads_in(quads));
        return py::make_tuple(v.ok(), v.message);
      },
      py::arg("points"), py::arg("quads"), "(ok, message) for a list of quads.");

  m.def(
      "holes",
      [](const std::vector<Pair>& pts) { return quads_out(qh::enumerate_4holes(to_set(pts)).holes); },
      py::arg("points"), "Every 4-hole, by brute force.");

  m.def(
      "max_compatible",
      [](const std::vector<Pair>& pts) { return qh::max_compatible(to_set(pts)).count; }, py::arg("points"),
      "Exact maximum number of pairwise compatible 4-holes (n <= 11).");

  m.def(
      "signature", [](const std::vector<Pair>& pts) { return qh::RadialFrame(to_set(pts)).signature().word(); },
      py::arg("points"), "Signature word of positions 2..n-2 around the lowest point.");

  m.def(
      "good_split",
      [](const std::vector<Pair>& pts, int r, int s) {
        const qh::PointSet set = to_set(pts);
        const qh::GoodSplit g = qh::good_split(set, r, s);
        py::dict d;
        d["side_a"] = g.side_a;
        d["side_b"] = g.side_b;
        d["bridge"] = g.bridge.v;
        d["method"] = g.method;
        d["problem"] = qh::check_good_split(set, g, r, s);
        return d;
      },
      py::arg("points"), py::arg("r"), py::arg("s"));

  m.def(
      "generate",
      [](const std::string& kind, int n, std::uint64_t seed, std::int64_t bbox) {
        return from_set(qh::generate(qh::parse_gen_kind(kind), n, seed, bbox));
      },
      py::arg("kind"), py::arg("n"), py::arg("seed"), py::arg("bbox") = qh::kDefaultBBox);

  m.def(
      "parse_points", [](const std::string& text) { return from_set(qh::parse_points(text)); }, py::arg("text"));
  m.def(
      "serialize_points", [](const std::vector<Pair>& pts) { return qh::serialize_points(to_set(pts)); },
      py::arg("points"));
  m.def(
      "render_svg",
      [](const std::vector<Pair>& pts, const std::vector<Quad>& quads) {
        return qh::render_svg(to_set(pts), quads_in(quads));
      },
      py::arg("points"), py::arg("quads"));
}
