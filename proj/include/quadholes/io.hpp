#pragma once

// Text formats for point sets and solutions, and SVG rendering.
//
// Point-set file:
//   n
//   x y        (n lines, signed decimal integers, one space)
//
// Solution file:
//   quadholes-solution 1
//   checksum <crc32 of the canonical point-set text, 8 hex digits>
//   n <n>
//   floor <guaranteed count>
//   quads <q>
//   a b c d    (q lines, counterclockwise point indices)
//   trace <t>
//   <free text> (t lines)

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadholes/geom.hpp"
#include "quadholes/solver.hpp"

namespace quadholes {

/// Strict parse, then coordinate bound, then general position. Every
/// failure is a ParseError carrying the 1-based line it refers to.
PointSet parse_points(std::string_view text);

/// Canonical text form; parse_points(serialize_points(s)) == s.
std::string serialize_points(const PointSet& s);

/// CRC-32 of serialize_points(s).
std::uint32_t checksum(const PointSet& s);

struct SolutionFile {
  std::uint32_t checksum = 0;
  int n = 0;
  int floor = 0;
  std::vector<QuadHole> quads;
  std::vector<std::string> trace;

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

SolutionFile make_solution_file(const PointSet& s, const Solution& sol);
std::string serialize_solution(const SolutionFile& f);
SolutionFile parse_solution(std::string_view text);

/// One line per trace entry: depth, size, kind, quads, fallback flag, method.
std::string format_trace(const TraceEntry& e);

/// Dots for points, translucent polygons for quads, p_0 in red. Integer
/// coordinates throughout, so output is byte-stable.
std::string render_svg(const PointSet& s, std::span<const QuadHole> quads);

/// Whole-file helpers; failures to open raise PreconditionError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace quadholes
