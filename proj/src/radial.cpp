#include "quadholes/radial.hpp"

#include <algorithm>
#include <numeric>

#include "quadholes/errors.hpp"

namespace quadholes {

namespace {

using detail::orient;

bool strictly_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int s1 = orient(a, b, p);
  const int s2 = orient(b, c, p);
  const int s3 = orient(c, a, p);
  return s1 != 0 && s1 == s2 && s2 == s3;
}

std::vector<SignRun> runs_of(const std::string& word) {
  std::vector<SignRun> runs;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int pos = SignatureSequence::first() + static_cast<int>(k);
    if (runs.empty() || runs.back().sign != word[k])
      runs.push_back({word[k], pos, 1});
    else
      ++runs.back().length;
  }
  return runs;
}

}  // namespace

RadialOrder radial_order(const PointSet& s) {
  if (s.size() < 2) throw PreconditionError("radial_order needs at least two points");
  RadialOrder r;
  r.origin = s.bottommost();
  const Point& o = s[r.origin];
  for (int i = 0; i < s.size(); ++i)
    if (i != r.origin) r.order.push_back(i);
  // Every other point sits in the half-plane above the origin (angles in
  // [0, pi)), so "b is clockwise of a" is a strict weak order.
  std::sort(r.order.begin(), r.order.end(),
            [&](int a, int b) { return orient(o, s[a], s[b]) < 0; });
  return r;
}

SignatureSequence::SignatureSequence(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != '+' && c != '-') throw PreconditionError("signature word may only contain '+' and '-'");
  runs_ = runs_of(word_);
}

SignatureSequence signature_sequence(const RadialOrder& r, const PointSet& s) {
  const int n = r.size();
  if (n < 4) throw PreconditionError("signature_sequence needs at least four points");
  std::string word;
  const Point& o = s[r.origin];
  for (int i = 2; i <= n - 2; ++i) {
    const bool reflex = strictly_in_triangle(o, s[r.at(i - 1)], s[r.at(i + 1)], s[r.at(i)]);
    word.push_back(reflex ? '+' : '-');
  }
  return SignatureSequence(std::move(word));
}

int minus_count(std::string_view word) {
  return static_cast<int>(std::count(word.begin(), word.end(), '-'));
}

int minus_count(const SignatureSequence& sig) { return minus_count(sig.word()); }

RadialFrame::RadialFrame(const PointSet& s) {
  const RadialOrder r = radial_order(s);
  std::vector<Point> labelled;
  labelled.reserve(static_cast<std::size_t>(s.size()));
  for (int pos = 0; pos < r.size(); ++pos) {
    labelled.push_back(s[r.at(pos)]);
    source_.push_back(r.at(pos));
  }
  pts_ = PointSet(std::move(labelled));
  compute_signature();
}

RadialFrame::RadialFrame(std::vector<Point> labelled, std::vector<int> source)
    : pts_(std::move(labelled)), source_(std::move(source)) {
  compute_signature();
}

void RadialFrame::compute_signature() {
  const int n = pts_.size();
  if (n < 4) {
    sig_ = SignatureSequence();
    return;
  }
  std::string word;
  for (int i = 2; i <= n - 2; ++i)
    word.push_back(strictly_in_triangle(pts_[0], pts_[i - 1], pts_[i + 1], pts_[i]) ? '+' : '-');
  sig_ = SignatureSequence(std::move(word));
}

bool RadialFrame::below(int a, int b, int c) const {
  const int side = orient(pts_[a], pts_[b], pts_[c]);
  return side != 0 && side == orient(pts_[a], pts_[b], pts_[0]);
}

RadialFrame RadialFrame::reflected() const {
  const int n = size();
  std::vector<Point> pts;
  std::vector<int> src;
  pts.reserve(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    const int from = mirror(pos);
    pts.push_back({-pts_[from].x, pts_[from].y});
    src.push_back(source_[static_cast<std::size_t>(from)]);
  }
  return RadialFrame(std::move(pts), std::move(src));
}

RadialFrame RadialFrame::without(std::initializer_list<int> positions) const {
  std::vector<Point> pts;
  std::vector<int> src;
  for (int pos = 0; pos < size(); ++pos) {
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      if (pos == 0) throw PreconditionError("cannot delete the origin of a radial frame");
      continue;
    }
    pts.push_back(pts_[pos]);
    src.push_back(source_[static_cast<std::size_t>(pos)]);
  }
  return RadialFrame(std::move(pts), std::move(src));
}

RadialFrame RadialFrame::prefix(int m) const {
  if (m < 1 || m > size()) throw PreconditionError("prefix length out of range");
  std::vector<Point> pts(pts_.points().begin(), pts_.points().begin() + m);
  std::vector<int> src(source_.begin(), source_.begin() + m);
  return RadialFrame(std::move(pts), std::move(src));
}

}  // namespace quadholes
