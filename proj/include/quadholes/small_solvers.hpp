#pragma once

// Certified solvers for 5-, 7-, 9- and 11-point sets, and the wedge reduction
// that adapts them to the sizes in between.
//
// The 9- and 11-point solvers follow the signature-sequence case analysis.
// Every branch's output is verified; when a branch fails (a transcription or
// geometry slip) the solver falls back to exhaustive search and says so in
// `fell_back` and `method`.

#include <string>
#include <vector>

#include "quadholes/geom.hpp"
#include "quadholes/radial.hpp"

namespace quadholes {

/// One construction step of a case-analysis solution, in radial positions of
/// the frame the solver worked on.
struct Brick {
  enum class Kind { PlusRun, MinusRun, EvenMinus, SixSet, Explicit, Nested, Exhaustive };

  Kind kind = Kind::Explicit;
  /// For PlusRun and MinusRun, the signature positions fed to the
  /// observation. For EvenMinus, the outer positions i-1 and i+2k+2.
  int first = 0;
  int last = 0;
  std::vector<int> forbidden_minus;
  std::vector<int> forbidden_plus;
  std::string note;
};

std::string to_string(Brick::Kind k);

struct SmallSolution {
  std::vector<QuadHole> quads;  ///< indices into the input point set
  std::string method;           ///< "exhaustive" or the case-analysis branch
  bool fell_back = false;
  /// No quad interior meets the open part of C(p_0; p_1, p_2) above l_{1,2}
  /// (front) or of C(p_0; p_{n-2}, p_{n-1}) above l_{n-2,n-1} (back).
  /// Computed exactly on the output, not inferred from the branch.
  bool front_clear = false;
  bool back_clear = false;
  std::vector<Brick> bricks;
};

/// No PlusRun brick covers a position some EvenMinus brick forbids for
/// plus runs, and likewise for MinusRun bricks.
bool respects_assertions(const SmallSolution& s);

/// Exhaustive; one hole. Throws ContradictionError if none exists.
SmallSolution solve5(const PointSet& s);
/// Exhaustive; two compatible holes.
SmallSolution solve7(const PointSet& s);
/// Case analysis on the signature word; three compatible holes.
SmallSolution solve9(const PointSet& s);
/// Case analysis on the signature word; four compatible holes.
SmallSolution solve11(const PointSet& s);

/// Frame-level entry points used by the solvers themselves and by tests that
/// want to steer the radial labelling. Quads index the frame's points.
SmallSolution solve9(const RadialFrame& f);
SmallSolution solve11(const RadialFrame& f);

/// Indices of p_0, p_1, ..., p_{m-1} in `s`. Every hole of that subset is a
/// hole of `s`, because all other points lie outside the wedge
/// C(p_0; p_1, p_{m-1}) that contains the subset's hull.
std::vector<int> wedge_indices(const PointSet& s, int m);
PointSet wedge_reduce(const PointSet& s, int m);

/// Guaranteed count for the base sizes 5, 7, 9, 11 (1, 2, 3, 4).
int small_floor(int size);

}  // namespace quadholes
