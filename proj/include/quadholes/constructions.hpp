#pragma once

// Reusable hole constructions over a radial frame. Positions are radial
// positions of the frame (p_0 is the origin) and returned quads index the
// frame's point set.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadholes/geom.hpp"
#include "quadholes/radial.hpp"

namespace quadholes {

/// Which branch of the even-minus construction fired. `Left*` cases are
/// decided by p_{i-1}, `Right*` by p_{i+2k+2}.
enum class EvenMinusCase {
  LeftBelowFirst,   ///< p_{i-1} below l_i
  LeftBelowLater,   ///< p_{i-1} first below l_{i+j}, j >= 1
  RightBelowFirst,  ///< p_{i+2k+2} below l_i
  RightBelowLater,  ///< p_{i+2k+2} first below l_{i+j}, j >= 1
  AboveAll,         ///< both outer points above every line
};

std::string to_string(EvenMinusCase c);

enum class Side { Left, Right };

struct ConstructionResult {
  std::vector<QuadHole> quads;
  int first = 0;  ///< consumed radial positions, inclusive
  int last = 0;
  /// Positions whose minus run must not be fed to the odd-minus fan later.
  std::vector<int> forbidden_minus;
  /// Positions whose plus run must not be fed to the even-plus partition.
  std::vector<int> forbidden_plus;
  /// No quad meets the open region of C(p_0; p_1, p_2) above l_{1,2}
  /// (front) or of C(p_0; p_{n-2}, p_{n-1}) above l_{n-2,n-1} (back).
  bool front_clear = true;
  bool back_clear = true;
  std::optional<EvenMinusCase> lemma_case;
  int lemma_j = 0;
  /// The even-minus geometry assertion failed and the consumed range was
  /// solved exhaustively instead.
  bool fell_back = false;
};

/// Even plus run s(p_i)..s(p_j): the convex polygon p_{i-1} .. p_{j+1} split
/// into (j-i+1)/2 quads, all above the chain.
ConstructionResult quads_from_plus_run(const RadialFrame& f, int i, int j);

/// Odd minus run s(p_i)..s(p_j): the fan from p_0 over p_{i-1} .. p_{j+1},
/// (j-i+2)/2 quads, all below the chain.
ConstructionResult quads_from_minus_run(const RadialFrame& f, int i, int j);

/// Minus run s(p_{i+1})..s(p_{i+2k}) of even length 2k: k+1 compatible
/// holes inside conv(p_0, p_{i-1}, ..., p_{i+2k+2}). `first` picks which
/// outer point is examined first.
ConstructionResult quads_even_minus(const RadialFrame& f, int i, int k, Side first = Side::Left);

/// Two compatible holes in a 6-point set whose hull has 5 or 6 vertices.
std::array<QuadHole, 2> quads_six_set(const PointSet& six);

/// Same, for six points of a larger set. Emptiness is only guaranteed with
/// respect to the six points; callers check the rest.
std::array<QuadHole, 2> quads_six_set(const PointSet& s, std::array<int, 6> idx);

/// Wedge baseline: cones of 5 (group 3) or 7 (group 5) consecutive radial
/// points sharing boundary rays, each solved exhaustively. Returns
/// floor((n-2)/3) or 2*floor((n-2)/5) quads.
std::vector<QuadHole> cone_partition_solver(const PointSet& s, int group);

/// Quad on four frame positions; throws ContradictionError if the points
/// are not in convex position.
QuadHole frame_quad(const RadialFrame& f, int a, int b, int c, int d);

/// Splits a convex polygon with an even number of vertices (given in cyclic
/// order) into quads fanning out from its first vertex.
std::vector<QuadHole> partition_convex_polygon(const PointSet& s, std::span<const int> cyclic);

/// Quad interior avoids the open cap region at the front (p_1 side) or the
/// back (p_{n-1} side) of the frame.
bool avoids_cap(const RadialFrame& f, const QuadHole& q, bool front);

}  // namespace quadholes
