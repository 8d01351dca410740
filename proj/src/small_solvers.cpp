#include "quadholes/small_solvers.hpp"

#include <algorithm>
#include <functional>

#include "quadholes/constructions.hpp"
#include "quadholes/errors.hpp"
#include "quadholes/oracle.hpp"

namespace quadholes {

namespace {

// A case-analysis answer in radial positions of one frame.
struct Plan {
  std::vector<QuadHole> quads;
  std::vector<Brick> bricks;
  std::string method;
  bool fell_back = false;
};

std::string positions_text(std::initializer_list<int> ps) {
  std::string s;
  for (int p : ps) s += (s.empty() ? "" : " ") + std::to_string(p);
  return s;
}

class Builder {
 public:
  Builder(const RadialFrame& f, std::string method) : f_(f) { plan_.method = std::move(method); }

  /// p_c strictly below l_{a,b}.
  bool below(int c, int a, int b) const { return f_.below(a, b, c); }
  bool above(int c, int a, int b) const { return !below(c, a, b); }

  Builder& tag(const std::string& branch) {
    plan_.method += ":" + branch;
    return *this;
  }

  Builder& quad(int a, int b, int c, int d) {
    plan_.quads.push_back(frame_quad(f_, a, b, c, d));
    plan_.bricks.push_back({Brick::Kind::Explicit, std::min({a, b, c, d}), std::max({a, b, c, d}), {}, {},
                            positions_text({a, b, c, d})});
    return *this;
  }

  Builder& plus(int i, int j) {
    absorb(quads_from_plus_run(f_, i, j), Brick::Kind::PlusRun, i, j, "");
    return *this;
  }

  Builder& minus(int i, int j) {
    absorb(quads_from_minus_run(f_, i, j), Brick::Kind::MinusRun, i, j, "");
    return *this;
  }

  /// Even-minus construction on the minus run i+1 .. i+2k.
  EvenMinusCase lemma(int i, int k, Side first = Side::Left) {
    ConstructionResult r = quads_even_minus(f_, i, k, first);
    const EvenMinusCase c = r.fell_back ? EvenMinusCase::AboveAll : *r.lemma_case;
    std::string note = "i=" + std::to_string(i) + " k=" + std::to_string(k) + " " + to_string(*r.lemma_case);
    if (r.fell_back) note += " (exhaustive)";
    if (r.fell_back) plan_.fell_back = true;
    const int first_pos = r.first, last_pos = r.last;
    absorb(std::move(r), Brick::Kind::EvenMinus, first_pos, last_pos, note);
    return c;
  }

  Builder& six(std::array<int, 6> idx) {
    const auto two = quads_six_set(f_.points(), idx);
    plan_.quads.insert(plan_.quads.end(), two.begin(), two.end());
    plan_.bricks.push_back({Brick::Kind::SixSet, idx.front(), idx.back(), {}, {}, ""});
    return *this;
  }

  /// Quads of a solution on a sub-frame, with `to_parent` mapping positions.
  Builder& nested(const SmallSolution& sub, const std::function<int(int)>& to_parent, const std::string& note) {
    for (const QuadHole& q : sub.quads)
      quad_silent(to_parent(q.v[0]), to_parent(q.v[1]), to_parent(q.v[2]), to_parent(q.v[3]));
    plan_.bricks.push_back({Brick::Kind::Nested, 0, 0, {}, {}, note + " [" + sub.method + "]"});
    if (sub.fell_back) plan_.fell_back = true;
    return *this;
  }

  Plan take() { return std::move(plan_); }

 private:
  void quad_silent(int a, int b, int c, int d) { plan_.quads.push_back(frame_quad(f_, a, b, c, d)); }

  void absorb(ConstructionResult r, Brick::Kind kind, int first, int last, std::string note) {
    plan_.quads.insert(plan_.quads.end(), r.quads.begin(), r.quads.end());
    plan_.bricks.push_back({kind, first, last, std::move(r.forbidden_minus), std::move(r.forbidden_plus), std::move(note)});
  }

  const RadialFrame& f_;
  Plan plan_;
};

int generic_count(const std::string& word) {
  int count = 0;
  const SignatureSequence sig(word);
  for (const SignRun& run : sig.runs())
    count += run.sign == '+' ? run.length / 2 : (run.length + 1) / 2;
  return count;
}

// Every maximal run on its own: even plus prefixes above the chain, odd
// minus prefixes below it.
Plan generic(const RadialFrame& f, const std::string& size_tag) {
  Builder b(f, size_tag + ":generic");
  for (const SignRun& run : f.signature().runs()) {
    if (run.sign == '+' && run.length >= 2) b.plus(run.start, run.start + 2 * (run.length / 2) - 1);
    if (run.sign == '-') b.minus(run.start, run.start + (run.length % 2 == 1 ? run.length - 1 : run.length - 2));
  }
  return b.take();
}

Plan mirrored(const RadialFrame& f, const Plan& p) {
  Plan out;
  out.method = p.method + ":reflected";
  out.fell_back = p.fell_back;
  const auto m = [&](int pos) { return f.mirror(pos); };
  for (const QuadHole& q : p.quads) out.quads.push_back(frame_quad(f, m(q.v[0]), m(q.v[1]), m(q.v[2]), m(q.v[3])));
  for (Brick b : p.bricks) {
    if (b.kind != Brick::Kind::Nested) {
      const int lo = m(b.last), hi = m(b.first);
      b.first = lo;
      b.last = hi;
    }
    for (int& x : b.forbidden_minus) x = m(x);
    for (int& x : b.forbidden_plus) x = m(x);
    out.bricks.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nine points. Positions 2..7 carry signs.

// The common opening of the "+--+-+..." ladders: decides on p_1 and p_6
// against l_{2,5} and l_{3,4}. Adds the two quads that handle positions
// 1..6 and returns true, or returns false when p_6 is below l_{2,5}.
bool opening_p1_p6(Builder& b) {
  if (b.below(1, 2, 5)) {
    b.tag("p1-below-l25").quad(0, 1, 2, 5).quad(2, 3, 4, 5);
    return true;
  }
  if (b.below(1, 3, 4)) {
    b.tag("p1-below-l34").quad(1, 3, 4, 2).quad(0, 2, 4, 5);
    return true;
  }
  if (b.above(6, 3, 4)) {
    b.tag("p6-above-l34").quad(1, 6, 4, 3).quad(2, 3, 4, 5);
    return true;
  }
  if (b.above(6, 2, 5)) {
    b.tag("p6-between").quad(0, 2, 3, 5).quad(3, 4, 6, 5);
    return true;
  }
  return false;
}

void nine_pmmppp(Builder& b) {
  const EvenMinusCase c = b.lemma(2, 1);
  if (c == EvenMinusCase::AboveAll)
    b.tag("above-all").quad(1, 6, 7, 8);
  else
    b.tag("lemma-" + to_string(c)).quad(4, 6, 7, 8);
}

void nine_pmmpmp(Builder& b) {
  if (opening_p1_p6(b)) {
    b.quad(0, 5, 6, 7);
    return;
  }
  if (b.above(8, 5, 6))
    b.tag("p8-above-l56").quad(4, 8, 6, 5).quad(2, 3, 4, 5).quad(0, 5, 6, 7);
  else if (b.above(8, 5, 7))
    b.tag("p8-between").quad(5, 6, 8, 7).quad(2, 3, 4, 5).quad(0, 2, 5, 7);
  else
    b.tag("p8-below-l57").quad(2, 3, 4, 5).quad(2, 5, 6, 7).quad(0, 2, 7, 8);
}

// Ordered by the patterns with generic count below three; each reverse is
// solved on the reflected frame.
std::optional<Plan> nine_special(const RadialFrame& f) {
  const std::string& w = f.signature().word();
  Builder b(f, "9:" + w);
  if (w == "+--+++") {
    nine_pmmppp(b);
  } else if (w == "+--+-+") {
    nine_pmmpmp(b);
  } else if (w == "+----+") {
    b.lemma(2, 2);
  } else if (w == "+--+--") {
    b.lemma(2, 1);
    b.minus(7, 7);
  } else {
    return std::nullopt;
  }
  return b.take();
}

Plan plan9(const RadialFrame& f) {
  const std::string& w = f.signature().word();
  if (generic_count(w) >= 3) return generic(f, "9");
  if (auto p = nine_special(f)) return *p;
  const RadialFrame g = f.reflected();
  if (auto p = nine_special(g)) return mirrored(f, *p);
  throw ContradictionError("no nine-point case covers signature " + w);
}

// ---------------------------------------------------------------------------
// Eleven points. Positions 2..9 carry signs.

void eleven_pmpmmppp(Builder& b) {
  if (b.below(8, 4, 7)) {
    b.tag("p8-below-l47").quad(0, 2, 3, 4).quad(4, 5, 6, 7).quad(6, 9, 8, 7).quad(0, 4, 7, 8);
  } else {
    b.tag("p8-above-l47").six({5, 6, 7, 8, 9, 10}).quad(0, 2, 3, 4).quad(0, 4, 5, 7);
  }
}

void eleven_pmmpmppp(Builder& b) {
  if (opening_p1_p6(b)) {
    b.quad(0, 5, 6, 7).quad(7, 10, 9, 8);
    return;
  }
  if (b.below(8, 5, 7))
    b.tag("p8-below-l57").quad(2, 3, 4, 5).quad(2, 5, 6, 7).quad(0, 2, 7, 8).quad(7, 10, 9, 8);
  else
    b.tag("p8-above-l57").six({5, 6, 7, 8, 9, 10}).quad(0, 2, 5, 7).quad(2, 3, 4, 5);
}

void eleven_pmmppmmp(Builder& b) {
  if (b.below(1, 2, 5)) {
    b.tag("p1-below-l25").quad(0, 1, 2, 5).quad(2, 3, 4, 5).quad(4, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.below(1, 3, 4)) {
    b.tag("p1-below-l34").quad(1, 3, 4, 2).quad(0, 2, 4, 5).quad(4, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.below(10, 6, 9)) {
    b.tag("p10-below-l69").quad(0, 10, 9, 6).quad(9, 8, 7, 6).quad(0, 2, 3, 4).quad(4, 5, 6, 7);
  } else if (b.below(10, 7, 8)) {
    b.tag("p10-below-l78").quad(10, 8, 7, 9).quad(0, 9, 7, 6).quad(0, 2, 3, 4).quad(4, 5, 6, 7);
  } else if (b.above(7, 3, 4)) {
    b.tag("p7-above-l34").quad(1, 7, 4, 3).quad(2, 3, 4, 5).quad(4, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(8, 3, 4)) {
    b.tag("p8-above-l34").quad(1, 8, 4, 3).quad(2, 3, 4, 5).quad(4, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(4, 7, 8)) {
    b.tag("p4-above-l78").quad(10, 4, 7, 8).quad(9, 8, 7, 6).quad(4, 5, 6, 7).quad(0, 2, 3, 4);
  } else if (b.above(3, 7, 8)) {
    b.tag("p3-above-l78").quad(10, 3, 7, 8).quad(6, 7, 8, 9).quad(4, 5, 6, 7).quad(0, 2, 3, 4);
  } else if (b.below(2, 5, 6)) {
    b.tag("p2-below-l56").quad(0, 2, 5, 6).quad(2, 3, 4, 5).quad(4, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.below(9, 5, 6)) {
    b.tag("p9-below-l56").quad(0, 5, 6, 9).quad(6, 7, 8, 9).quad(4, 5, 6, 7).quad(0, 2, 3, 4);
  } else {
    b.tag("hexagon").six({3, 4, 5, 6, 7, 8}).quad(0, 2, 3, 5).quad(0, 6, 8, 9);
  }
}

void eleven_pmmpmpmp(Builder& b) {
  if (opening_p1_p6(b)) {
    b.quad(0, 5, 6, 7).quad(0, 7, 8, 9);
    return;
  }
  if (b.above(8, 5, 6)) {
    b.tag("p8-above-l56").quad(2, 3, 4, 5).quad(4, 8, 6, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(8, 5, 7)) {
    b.tag("p8-between").quad(0, 2, 5, 7).quad(2, 3, 4, 5).quad(0, 7, 8, 9).quad(5, 6, 8, 7);
  } else if (b.below(10, 7, 9)) {
    b.tag("p10-below-l79").quad(0, 2, 9, 10).quad(2, 3, 4, 5).quad(2, 5, 6, 7).quad(2, 7, 8, 9);
  } else if (b.below(10, 7, 8)) {
    b.tag("p10-below-l78").quad(7, 8, 10, 9).quad(2, 3, 4, 5).quad(2, 5, 6, 7).quad(0, 2, 7, 9);
  } else {
    b.tag("p10-above-l78").quad(6, 10, 8, 7).quad(2, 3, 4, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  }
}

// +-+--+-+ with p_8 below l_{4,7}; the mirrored configuration is handled
// by the caller through reflection.
void eleven_pmpmmpmp_right(Builder& b) {
  if (b.below(10, 7, 9))
    b.tag("p10-below-l79").quad(0, 2, 3, 4).quad(4, 5, 6, 7).quad(4, 7, 8, 9).quad(0, 4, 9, 10);
  else if (b.below(10, 7, 8))
    b.tag("p10-below-l78").quad(7, 8, 10, 9).quad(4, 5, 6, 7).quad(0, 4, 7, 9).quad(0, 2, 3, 4);
  else
    b.tag("p10-above-l78").quad(0, 2, 3, 4).quad(4, 5, 6, 7).quad(0, 7, 8, 9).quad(6, 10, 8, 7);
}

void eleven_pmpmmmmp(Builder& b) {
  if (b.below(10, 4, 9) || b.below(10, 5, 8) || b.below(10, 6, 7)) {
    b.tag("p10-below-a-line");
    b.lemma(4, 2, Side::Right);
    b.quad(0, 2, 3, 4);
  } else if (b.above(3, 4, 9)) {
    b.tag("p3-above-l49");
    b.lemma(4, 2, Side::Left);
    b.quad(0, 2, 3, 4);
  } else if (b.above(1, 3, 4)) {
    b.tag("p1-above-l34").quad(0, 3, 4, 9).quad(4, 5, 6, 7).quad(4, 7, 8, 9).quad(1, 5, 4, 3);
  } else {
    b.tag("p1-below-l34").quad(1, 3, 4, 2).quad(0, 2, 4, 9).quad(4, 5, 8, 9).quad(5, 6, 7, 8);
  }
}

void eleven_pmmpmmmp(Builder& b) {
  if (b.below(1, 2, 5)) {
    b.tag("p1-below-l25").quad(2, 3, 4, 5).quad(0, 1, 2, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.below(1, 3, 4)) {
    b.tag("p1-below-l34").quad(1, 3, 4, 2).quad(0, 2, 4, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(1, 4, 5)) {
    b.tag("p1-above-l45").quad(1, 6, 5, 4).quad(0, 2, 4, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(1, 3, 5)) {
    b.tag("p1-between-l45-l35").quad(1, 4, 5, 3).quad(0, 2, 3, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.below(1, 2, 9)) {
    b.tag("p1-below-l29").quad(0, 1, 2, 9).quad(2, 3, 4, 5).quad(5, 6, 7, 8).quad(2, 5, 8, 9);
  } else if (b.above(6, 3, 4)) {
    b.tag("p6-above-l34").quad(1, 6, 4, 3).quad(2, 3, 4, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(6, 3, 5)) {
    b.tag("p6-between-l34-l35").quad(3, 4, 6, 5).quad(0, 2, 3, 5).quad(0, 5, 6, 7).quad(0, 7, 8, 9);
  } else if (b.above(4, 5, 7)) {
    b.tag("p4-above-l57").quad(4, 6, 7, 5).quad(2, 3, 4, 5).quad(5, 7, 8, 9).quad(0, 2, 5, 9);
  } else {
    b.tag("p4-below-l57").quad(5, 6, 7, 8).quad(3, 4, 5, 8).quad(1, 3, 8, 2).quad(0, 2, 8, 9);
  }
}

std::optional<Plan> eleven_special(const RadialFrame& f) {
  const std::string& w = f.signature().word();
  Builder b(f, "11:" + w);
  if (w == "+--+++++") {
    const EvenMinusCase c = b.lemma(2, 1);
    if (c == EvenMinusCase::AboveAll)
      b.tag("above-all").quad(1, 6, 7, 8).quad(1, 8, 9, 10);
    else
      b.tag("lemma-" + to_string(c)).quad(4, 6, 7, 8).quad(4, 8, 9, 10);
  } else if (w == "+++--+++") {
    const EvenMinusCase c = b.lemma(4, 1);
    if (c == EvenMinusCase::AboveAll)
      b.tag("above-all").quad(1, 2, 3, 8).quad(1, 8, 9, 10);
    else
      b.tag("lemma-" + to_string(c)).quad(1, 2, 3, 5).quad(6, 8, 9, 10);
  } else if (w == "+-+++--+") {
    b.minus(3, 3);
    const EvenMinusCase c = b.lemma(6, 1);
    if (c == EvenMinusCase::AboveAll)
      b.tag("above-all").quad(3, 4, 5, 10);
    else
      b.tag("lemma-" + to_string(c)).quad(3, 4, 5, 7);
  } else if (w == "+----+++") {
    b.lemma(2, 2);
    b.plus(8, 9);
  } else if (w == "+------+") {
    b.lemma(2, 3);
  } else if (w == "+-+--+++") {
    eleven_pmpmmppp(b);
  } else if (w == "+--+-+++") {
    eleven_pmmpmppp(b);
  } else if (w == "+--++--+") {
    eleven_pmmppmmp(b);
  } else if (w == "+--+-+-+") {
    eleven_pmmpmpmp(b);
  } else if (w == "+-+--+-+") {
    if (!b.below(3, 4, 7) && !b.below(8, 4, 7)) {
      b.tag("neither-below-l47");
      b.lemma(4, 1);
      b.minus(3, 3).minus(8, 8);
    } else if (b.below(8, 4, 7)) {
      eleven_pmpmmpmp_right(b);
    } else {
      return std::nullopt;  // p_3 below l_{4,7}: the caller reflects
    }
  } else if (w == "+-+----+") {
    eleven_pmpmmmmp(b);
  } else if (w == "+--+---+") {
    eleven_pmmpmmmp(b);
  } else {
    return std::nullopt;
  }
  return b.take();
}

SmallSolution solve_frame(const RadialFrame& f, int target, const std::function<Plan()>& attempt);

Plan plan11(const RadialFrame& f) {
  const std::string& w = f.signature().word();
  const auto shift2 = [](int q) { return q == 0 ? 0 : q + 2; };
  const auto same = [](int q) { return q; };

  if (w.front() == '-') {
    Builder b(f, "11:front-minus");
    b.nested(solve9(f.without({1, 2})), shift2, "nine without p1 p2").quad(0, 1, 2, 3);
    return b.take();
  }
  if (w.back() == '-') {
    Builder b(f, "11:back-minus");
    b.nested(solve9(f.without({9, 10})), same, "nine without p9 p10").quad(0, 8, 9, 10);
    return b.take();
  }
  if (w.compare(0, 3, "++-") == 0) {
    const SmallSolution nine = solve9(f.without({1, 2}));
    if (!nine.front_clear) throw ContradictionError("nine-point solution touches the front cap");
    Builder b(f, "11:front-plus-plus");
    b.nested(nine, shift2, "nine without p1 p2").quad(1, 2, 3, 4);
    return b.take();
  }
  if (w.compare(w.size() - 3, 3, "-++") == 0) {
    const SmallSolution nine = solve9(f.without({9, 10}));
    if (!nine.back_clear) throw ContradictionError("nine-point solution touches the back cap");
    Builder b(f, "11:back-plus-plus");
    b.nested(nine, same, "nine without p9 p10").quad(7, 8, 9, 10);
    return b.take();
  }
  if (generic_count(w) >= 4) return generic(f, "11");
  if (auto p = eleven_special(f)) return *p;
  const RadialFrame g = f.reflected();
  if (auto p = eleven_special(g)) return mirrored(f, *p);
  throw ContradictionError("no eleven-point case covers signature " + w);
}

// ---------------------------------------------------------------------------

SmallSolution exhaustive(const PointSet& s, int target, const std::string& method) {
  const auto found = find_compatible(enumerate_4holes(s), target);
  if (!found)
    throw ContradictionError("no " + std::to_string(target) + " compatible 4-holes among " +
                             std::to_string(s.size()) + " points");
  SmallSolution out;
  out.quads = *found;
  out.method = method;
  out.bricks.push_back({Brick::Kind::Exhaustive, 0, s.size() - 1, {}, {}, ""});
  return out;
}

void set_flags(const RadialFrame& f, SmallSolution& s) {
  s.front_clear = std::all_of(s.quads.begin(), s.quads.end(), [&](const QuadHole& q) { return avoids_cap(f, q, true); });
  s.back_clear = std::all_of(s.quads.begin(), s.quads.end(), [&](const QuadHole& q) { return avoids_cap(f, q, false); });
}

SmallSolution solve_frame(const RadialFrame& f, int target, const std::function<Plan()>& attempt) {
  std::string failure;
  std::string method;
  try {
    Plan p = attempt();
    method = p.method;
    const Verdict v = verify_quads(f.points(), p.quads);
    if (v.ok() && static_cast<int>(p.quads.size()) >= target) {
      SmallSolution out;
      out.quads = std::move(p.quads);
      out.method = std::move(p.method);
      out.fell_back = p.fell_back;
      out.bricks = std::move(p.bricks);
      set_flags(f, out);
      return out;
    }
    failure = v.ok() ? "too few quads" : v.message;
  } catch (const ContradictionError& e) {
    failure = e.what();
  } catch (const PreconditionError& e) {
    failure = e.what();
  }
  SmallSolution out = exhaustive(f.points(), target, "exhaustive after " + (method.empty() ? "case analysis" : method) +
                                                         " failed: " + failure);
  out.fell_back = true;
  set_flags(f, out);
  return out;
}

SmallSolution to_source(const RadialFrame& f, const PointSet& s, SmallSolution sol) {
  for (QuadHole& q : sol.quads)
    q = *make_quad(s, {f.source(q.v[0]), f.source(q.v[1]), f.source(q.v[2]), f.source(q.v[3])});
  return sol;
}

void require_size(const PointSet& s, int n, const char* who) {
  if (s.size() != n) throw PreconditionError(std::string(who) + " needs exactly " + std::to_string(n) + " points");
}

}  // namespace

std::string to_string(Brick::Kind k) {
  switch (k) {
    case Brick::Kind::PlusRun: return "plus-run";
    case Brick::Kind::MinusRun: return "minus-run";
    case Brick::Kind::EvenMinus: return "even-minus";
    case Brick::Kind::SixSet: return "six-set";
    case Brick::Kind::Explicit: return "explicit";
    case Brick::Kind::Nested: return "nested";
    case Brick::Kind::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

bool respects_assertions(const SmallSolution& s) {
  for (const Brick& lemma : s.bricks) {
    if (lemma.kind != Brick::Kind::EvenMinus) continue;
    for (const Brick& run : s.bricks) {
      const auto covers = [&](const std::vector<int>& forbidden) {
        return std::any_of(forbidden.begin(), forbidden.end(), [&](int p) { return p >= run.first && p <= run.last; });
      };
      if (run.kind == Brick::Kind::PlusRun && covers(lemma.forbidden_plus)) return false;
      if (run.kind == Brick::Kind::MinusRun && covers(lemma.forbidden_minus)) return false;
    }
  }
  return true;
}

int small_floor(int size) {
  switch (size) {
    case 5: return 1;
    case 7: return 2;
    case 9: return 3;
    case 11: return 4;
    default: throw PreconditionError("small solvers exist for 5, 7, 9 and 11 points only");
  }
}

SmallSolution solve5(const PointSet& s) {
  require_size(s, 5, "solve5");
  return exhaustive(s, 1, "exhaustive");
}

SmallSolution solve7(const PointSet& s) {
  require_size(s, 7, "solve7");
  return exhaustive(s, 2, "exhaustive");
}

SmallSolution solve9(const RadialFrame& f) {
  if (f.size() != 9) throw PreconditionError("solve9 needs exactly 9 points");
  return solve_frame(f, 3, [&] { return plan9(f); });
}

SmallSolution solve11(const RadialFrame& f) {
  if (f.size() != 11) throw PreconditionError("solve11 needs exactly 11 points");
  return solve_frame(f, 4, [&] { return plan11(f); });
}

SmallSolution solve9(const PointSet& s) {
  require_size(s, 9, "solve9");
  const RadialFrame f(s);
  return to_source(f, s, solve9(f));
}

SmallSolution solve11(const PointSet& s) {
  require_size(s, 11, "solve11");
  const RadialFrame f(s);
  return to_source(f, s, solve11(f));
}

std::vector<int> wedge_indices(const PointSet& s, int m) {
  if (m < 2 || m > s.size()) throw PreconditionError("wedge size out of range");
  const RadialOrder r = radial_order(s);
  std::vector<int> idx{r.origin};
  for (int pos = 1; pos < m; ++pos) idx.push_back(r.at(pos));
  return idx;
}

PointSet wedge_reduce(const PointSet& s, int m) { return s.subset(wedge_indices(s, m)); }

}  // namespace quadholes
