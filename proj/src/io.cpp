#include "quadholes/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>
#include <fmt/format.h>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

// Splits into lines; a single trailing newline is allowed, '\r' is not.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

template <typename T>
bool parse_number(std::string_view s, T& out, int base = 10) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') return false;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out, base);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "<keyword> <value>" with exactly one space.
std::string_view keyed(std::string_view line, std::string_view key, int lineno) {
  if (line.size() <= key.size() + 1 || line.substr(0, key.size()) != key || line[key.size()] != ' ')
    throw ParseError(lineno, "expected '" + std::string(key) + " <value>'");
  return line.substr(key.size() + 1);
}

int keyed_count(std::string_view line, std::string_view key, int lineno) {
  int v = 0;
  if (!parse_number(keyed(line, key, lineno), v) || v < 0)
    throw ParseError(lineno, "'" + std::string(key) + "' needs a non-negative integer");
  return v;
}

}  // namespace

PointSet parse_points(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing point count");
  int n = 0;
  if (!parse_number(lines[0], n) || n < 0) throw ParseError(1, "point count must be a non-negative integer");
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(static_cast<int>(std::min<std::size_t>(lines.size(), static_cast<std::size_t>(n) + 1)) + 1,
                     "expected " + std::to_string(n) + " point lines, found " + std::to_string(lines.size() - 1));

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int lineno = i + 2;
    const std::string_view line = lines[static_cast<std::size_t>(i) + 1];
    const std::size_t sp = line.find(' ');
    Point p;
    if (sp == std::string_view::npos || !parse_number(line.substr(0, sp), p.x) ||
        !parse_number(line.substr(sp + 1), p.y))
      throw ParseError(lineno, "expected two integers separated by one space");
    if (!in_range(p)) throw ParseError(lineno, "coordinate magnitude exceeds 2^30");
    pts.push_back(p);
  }
  PointSet s(std::move(pts));
  if (const auto bad = find_degeneracy(s)) {
    const int worst = std::max({(*bad)[0], (*bad)[1], (*bad)[2]});
    if ((*bad)[2] < 0)
      throw ParseError(worst + 2, "point " + std::to_string(worst) + " duplicates point " +
                                      std::to_string(std::min((*bad)[0], (*bad)[1])));
    throw ParseError(worst + 2, "points " + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1]) + ", " +
                                    std::to_string((*bad)[2]) + " are collinear");
  }
  return s;
}

std::string serialize_points(const PointSet& s) {
  std::string out = fmt::format("{}\n", s.size());
  for (const Point& p : s.points()) out += fmt::format("{} {}\n", p.x, p.y);
  return out;
}

std::uint32_t checksum(const PointSet& s) {
  const std::string text = serialize_points(s);
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  return crc.checksum();
}

std::string format_trace(const TraceEntry& e) {
  return fmt::format("depth={} size={} kind={} quads={} fallback={} method={}", e.depth, e.size, e.kind, e.quads,
                     e.fell_back ? 1 : 0, e.method);
}

SolutionFile make_solution_file(const PointSet& s, const Solution& sol) {
  SolutionFile f;
  f.checksum = checksum(s);
  f.n = s.size();
  f.floor = sol.floor;
  f.quads = sol.quads;
  for (const TraceEntry& e : sol.trace) f.trace.push_back(format_trace(e));
  return f;
}

std::string serialize_solution(const SolutionFile& f) {
  std::string out = "quadholes-solution 1\n";
  out += fmt::format("checksum {:08x}\nn {}\nfloor {}\nquads {}\n", f.checksum, f.n, f.floor, f.quads.size());
  for (const QuadHole& q : f.quads) out += fmt::format("{} {} {} {}\n", q.v[0], q.v[1], q.v[2], q.v[3]);
  out += fmt::format("trace {}\n", f.trace.size());
  for (const std::string& t : f.trace) {
    if (t.find('\n') != std::string::npos) throw PreconditionError("trace lines may not contain newlines");
    out += t + "\n";
  }
  return out;
}

SolutionFile parse_solution(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  const auto next = [&]() -> std::string_view {
    if (at >= lines.size()) throw ParseError(static_cast<int>(at) + 1, "unexpected end of solution file");
    return lines[at++];
  };
  const auto lineno = [&] { return static_cast<int>(at); };

  if (next() != "quadholes-solution 1") throw ParseError(1, "not a version-1 solution file");
  SolutionFile f;
  const std::string_view hex = keyed(next(), "checksum", lineno());
  if (hex.size() != 8 || !parse_number(hex, f.checksum, 16)) throw ParseError(lineno(), "checksum must be 8 hex digits");
  f.n = keyed_count(next(), "n", lineno());
  f.floor = keyed_count(next(), "floor", lineno());
  const int q = keyed_count(next(), "quads", lineno());
  for (int i = 0; i < q; ++i) {
    const std::string_view line = next();
    QuadHole h;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t sp = c < 3 ? line.find(' ', pos) : line.size();
      if (sp == std::string_view::npos || !parse_number(line.substr(pos, sp - pos), h.v[c]))
        throw ParseError(lineno(), "expected four integer indices");
      pos = sp + 1;
    }
    f.quads.push_back(h);
  }
  const int t = keyed_count(next(), "trace", lineno());
  for (int i = 0; i < t; ++i) f.trace.emplace_back(next());
  if (at != lines.size()) throw ParseError(static_cast<int>(at) + 1, "trailing content after trace");
  return f;
}

std::string render_svg(const PointSet& s, std::span<const QuadHole> quads) {
  std::int64_t x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!s.empty()) {
    x0 = x1 = s[0].x;
    y0 = y1 = s[0].y;
    for (const Point& p : s.points()) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const std::int64_t span = std::max<std::int64_t>({x1 - x0, y1 - y0, 1});
  const std::int64_t margin = span / 20 + 1;
  const std::int64_t radius = span / 250 + 1;
  const std::int64_t stroke = span / 1000 + 1;
  const std::int64_t w = x1 - x0 + 2 * margin, h = y1 - y0 + 2 * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">\n", x0 - margin,
      -(y1 + margin), w, h, 800 * h / w);
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", x0 - margin,
                     -(y1 + margin), w, h);
  // SVG's y axis points down; every y is negated.
  out += fmt::format("<g fill=\"#3a7bd5\" fill-opacity=\"0.35\" stroke=\"#1d4f91\" stroke-width=\"{}\">\n", stroke);
  for (const QuadHole& q : quads) {
    out += "<polygon points=\"";
    for (std::size_t c = 0; c < 4; ++c) {
      const int v = q.v[c];
      if (v < 0 || v >= s.size()) throw PreconditionError("quad index out of range in render");
      out += fmt::format("{}{},{}", c ? " " : "", s[v].x, -s[v].y);
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g fill=\"black\">\n";
  const int origin = s.empty() ? -1 : s.bottommost();
  for (int i = 0; i < s.size(); ++i)
    if (i != origin) out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", s[i].x, -s[i].y, radius);
  out += "</g>\n";
  if (origin >= 0)
    out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#d62728\"/>\n", s[origin].x, -s[origin].y,
                       2 * radius);
  out += "</svg>\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw PreconditionError("failed writing " + path);
}

}  // namespace quadholes
