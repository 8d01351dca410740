#pragma once

// Radial ordering around the bottommost point and the +/- signature word.
//
// Radial positions are written p_0 (the origin) through p_{n-1}. p_1 is the
// point nearest the negative x-axis and the rest follow clockwise. The
// signature of p_i (2 <= i <= n-2) is '+' when p_i lies strictly inside the
// triangle p_0 p_{i-1} p_{i+1}, i.e. the chain turns toward the origin there.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "quadholes/geom.hpp"

namespace quadholes {

struct RadialOrder {
  int origin = -1;         ///< index of p_0
  std::vector<int> order;  ///< indices of p_1 .. p_{n-1}

  int size() const noexcept { return static_cast<int>(order.size()) + 1; }
  /// Point index at radial position `pos` (0 is the origin).
  int at(int pos) const { return pos == 0 ? origin : order[static_cast<std::size_t>(pos - 1)]; }
};

/// Bottommost by (y, x) as origin; the others sorted clockwise from the
/// negative x-axis. Requires |s| >= 2.
RadialOrder radial_order(const PointSet& s);

struct SignRun {
  char sign = '+';
  int start = 0;   ///< absolute radial position of the first entry
  int length = 0;

  int last() const noexcept { return start + length - 1; }
  friend bool operator==(const SignRun&, const SignRun&) = default;
};

/// Signs of positions 2 .. n-2, indexed by absolute radial position.
class SignatureSequence {
 public:
  SignatureSequence() = default;
  explicit SignatureSequence(std::string word);

  /// First and last positions carrying a sign.
  static constexpr int first() noexcept { return 2; }
  int last() const noexcept { return first() + static_cast<int>(word_.size()) - 1; }
  bool empty() const noexcept { return word_.empty(); }

  char at(int pos) const { return word_.at(static_cast<std::size_t>(pos - first())); }
  const std::string& word() const noexcept { return word_; }
  const std::vector<SignRun>& runs() const noexcept { return runs_; }

 private:
  std::string word_;
  std::vector<SignRun> runs_;
};

SignatureSequence signature_sequence(const RadialOrder& r, const PointSet& s);

/// Number of '-' entries.
int minus_count(const SignatureSequence& sig);
int minus_count(std::string_view word);

/// A point set relabelled so that point index == radial position. The small
/// solvers and the construction bricks work on frames, which keeps the case
/// analyses readable (p_5 is simply index 5) and makes reflection and
/// deletion cheap.
class RadialFrame {
 public:
  RadialFrame() = default;
  explicit RadialFrame(const PointSet& s);

  int size() const noexcept { return pts_.size(); }
  const PointSet& points() const noexcept { return pts_; }
  const Point& operator[](int pos) const { return pts_[pos]; }
  const SignatureSequence& signature() const noexcept { return sig_; }
  char sign(int pos) const { return sig_.at(pos); }

  /// Index in the originally supplied point set for radial position `pos`.
  int source(int pos) const { return source_[static_cast<std::size_t>(pos)]; }

  /// p_c lies strictly on the origin's side of the line through p_a and p_b.
  bool below(int a, int b, int c) const;
  bool above(int a, int b, int c) const { return !below(a, b, c); }

  /// Mirror image across a vertical line with the radial order reversed, so
  /// the same origin is kept and the signature word is reversed.
  RadialFrame reflected() const;

  /// Position of `pos` in the reflected frame (and back).
  int mirror(int pos) const noexcept { return pos == 0 ? 0 : size() - pos; }

  /// Frame with the given radial positions deleted. The origin stays; the
  /// remaining positions keep their relative order.
  RadialFrame without(std::initializer_list<int> positions) const;

  /// First `m` positions (the origin plus a radial prefix).
  RadialFrame prefix(int m) const;

 private:
  RadialFrame(std::vector<Point> labelled, std::vector<int> source);
  void compute_signature();

  PointSet pts_;
  std::vector<int> source_;
  SignatureSequence sig_;
};

}  // namespace quadholes
