#ifndef WALLCROSS_CONJECTURES_HPP_
#define WALLCROSS_CONJECTURES_HPP_

#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallcross/crystal.hpp"
#include "wallcross/farey.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/wallcross.hpp"

namespace wallcross {

/// Internal invariant of a harness broke (distinct from a conjecture failing).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Two-block shapes z^t x^y

/// t parts equal to z and y parts equal to x, z < x. A zero field in a
/// degenerate fit marks a free parameter.
struct TwoBlockShape {
  int x = 0;
  int y = 0;
  int z = 0;
  int t = 0;
  friend bool operator==(const TwoBlockShape&, const TwoBlockShape&) = default;
};

struct TwoBlockFit {
  enum class Kind { exact, degenerate, none };
  Kind kind = Kind::none;
  /// One shape for `exact`; every consistent reading for `degenerate`.
  std::vector<TwoBlockShape> shapes;
};

inline const char* to_string(TwoBlockFit::Kind k) {
  switch (k) {
    case TwoBlockFit::Kind::exact: return "exact";
    case TwoBlockFit::Kind::degenerate: return "degenerate";
    case TwoBlockFit::Kind::none: return "none";
  }
  return "?";
}

inline int distinct_part_sizes(const Partition& p) {
  int k = 0;
  for (int r = 1; r <= p.length(); ++r)
    if (r == 1 || p.row(r) != p.row(r - 1)) ++k;
  return k;
}

inline TwoBlockFit fit_two_block(const Partition& p) {
  std::map<int, int> mult;
  for (int v : p.parts()) ++mult[v];
  TwoBlockFit fit;
  if (mult.empty()) {
    fit.kind = TwoBlockFit::Kind::degenerate;
    fit.shapes.push_back({});
  } else if (mult.size() == 1) {
    auto [s, k] = *mult.begin();
    fit.kind = TwoBlockFit::Kind::degenerate;
    fit.shapes.push_back({s, k, 0, 0});
    fit.shapes.push_back({0, 0, s, k});
  } else if (mult.size() == 2) {
    auto lo = mult.begin();
    auto hi = std::next(lo);
    fit.kind = TwoBlockFit::Kind::exact;
    fit.shapes.push_back({hi->first, hi->second, lo->first, lo->second});
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Sign representation shape law

struct EquationVerdict {
  TwoBlockShape shape;  // with free parameters solved for
  bool a = false;       // z + y == b_i
  bool b = false;       // y + t + z - x == b_{i+1}
  bool size = false;    // x*y + z*t == n
  bool diophantine = false;  // x*b_i - y*(b_{i+1}-b_i) + b_i*(b_{i+1}-b_i) == n

  bool passed() const { return a && b && size; }
};

/// Checks the three equations for one reading of the shape; free parameters of
/// a degenerate reading are solved from the equations that involve them.
inline EquationVerdict check_shape_equations(TwoBlockShape s, int n, std::int64_t bi,
                                             std::int64_t bj) {
  if (s.t == 0 && s.z == 0 && s.y > 0) s.z = static_cast<int>(bi - s.y);         // z^0: z free
  if (s.y == 0 && s.x == 0 && s.t > 0) s.x = static_cast<int>(s.t + s.z - bj);   // x^0: x free
  EquationVerdict v;
  v.shape = s;
  const std::int64_t x = s.x, y = s.y, z = s.z, t = s.t;
  v.a = z + y == bi;
  v.b = y + t + z - x == bj;
  v.size = x * y + z * t == n;
  v.diophantine = x * bi - y * (bj - bi) + bi * (bj - bi) == n;
  if (v.a && v.b && v.size && !v.diophantine)
    throw InternalError("shape equations hold but the Diophantine identity fails");
  return v;
}

struct SignChamber {
  Wall wall;  // r: the state is N_r(1^n)
  Partition state;
  Variant variant = Variant::regular;
  TwoBlockFit fit;
  Wall lower;  // bracketing thresholds a_i/b_i and a_{i+1}/b_{i+1}
  Wall upper;
  /// r lies strictly between the thresholds (otherwise r is a threshold).
  bool interior = false;
  bool at_most_two_sizes = false;
  std::vector<EquationVerdict> readings;

  bool equations_hold() const {
    for (const auto& v : readings)
      if (v.passed()) return true;
    return false;
  }
  /// The checks the conjecture asserts for this wall.
  bool passed() const { return at_most_two_sizes && (!interior || equations_hold()); }
};

struct ThresholdReport {
  int n = 0;
  Variant variant = Variant::prefer_restricted;
  std::vector<Wall> thresholds;
  std::vector<SignChamber> chambers;
  std::optional<std::string> step_error;
  std::optional<std::string> first_counterexample;

  bool passed() const { return !step_error && !first_counterexample; }
};

namespace detail {

struct Run {
  std::size_t begin, end;  // step indices [begin, end)
  Wall lower, upper;
};

/// Maximal runs of equal consecutive states; a run starts at a threshold wall
/// (a wall whose state differs from the state before it).
inline std::vector<Run> state_runs(const OrbitTrace& trace) {
  std::vector<Run> runs;
  const auto& st = trace.steps;
  for (std::size_t k = 0; k < st.size(); ++k) {
    bool change = st[k].post != st[k].pre;
    if (k == 0 || change) {
      // a first wall that leaves 1^n unchanged opens a run bounded below by 0/1
      Wall lo = change ? st[k].wall : Wall{0, 1};
      if (!runs.empty()) {
        runs.back().end = k;
        runs.back().upper = st[k].wall;
      }
      runs.push_back({k, st.size(), lo, kTerminalWall});
    }
  }
  return runs;
}

}  // namespace detail

/// Runs the sign orbit and tests the z^t x^y shape law against detected
/// thresholds. Never throws on a conjecture failure; the report carries it.
inline ThresholdReport check_sign_conjecture(int n, Variant variant = Variant::prefer_restricted,
                                             bool allow_composite = false) {
  ThresholdReport rep;
  rep.n = n;
  rep.variant = variant;
  OrbitTrace trace;
  try {
    trace = sign_orbit(n, std::nullopt, variant, allow_composite);
  } catch (const StepError& e) {
    rep.step_error = e.what();
    rep.first_counterexample = std::string("step failure: ") + e.what();
    return rep;
  }
  for (const auto& run : detail::state_runs(trace)) {
    if (run.lower.a != 0) rep.thresholds.push_back(run.lower);
    for (std::size_t k = run.begin; k < run.end; ++k) {
      const StepRecord& s = trace.steps[k];
      SignChamber ch;
      ch.wall = s.wall;
      ch.state = s.post;
      ch.variant = s.variant;
      ch.fit = fit_two_block(s.post);
      ch.lower = run.lower;
      ch.upper = run.upper;
      ch.interior = run.lower < s.wall;
      ch.at_most_two_sizes = distinct_part_sizes(s.post) <= 2;
      for (const auto& shape : ch.fit.shapes)
        ch.readings.push_back(check_shape_equations(shape, n, run.lower.b, run.upper.b));
      if (!ch.passed() && !rep.first_counterexample) {
        rep.first_counterexample =
            "r=" + s.wall.str() + " state " + s.post.str() +
            (ch.at_most_two_sizes ? " violates the equations for thresholds " + run.lower.str() +
                                        ", " + run.upper.str()
                                  : " has more than two distinct part sizes");
      }
      rep.chambers.push_back(std::move(ch));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rim remark

struct RimRemarkRow {
  Wall wall;
  Partition state;
  Wall lower, upper;
  bool interior = false;
  /// b_{i+1}-rim of P is rim(P) without its top row. Unset when b_{i+1} < 2.
  std::optional<bool> upper_rim;
  /// b_i-rim of P^t is rim(P^t) without its top row. Unset when b_i < 2.
  std::optional<bool> lower_rim_transposed;
  /// After removing the b_{i+1}-rim, at most two row lengths remain.
  std::optional<bool> remainder_two_sizes;

  bool passed() const {
    return upper_rim.value_or(true) && lower_rim_transposed.value_or(true) &&
           remainder_two_sizes.value_or(true);
  }
};

struct RimRemarkReport {
  int n = 0;
  std::vector<RimRemarkRow> rows;
  std::optional<std::string> step_error;

  bool passed() const {
    if (step_error) return false;
    for (const auto& r : rows)
      if (r.interior && !r.passed()) return false;
    return true;
  }
};

inline std::vector<Box> rim_without_top_row(const Partition& p) {
  std::vector<Box> out;
  for (const Box& b : rim(p))
    if (b.row != 1) out.push_back(b);
  return out;
}

inline RimRemarkReport check_rim_remark(int n, Variant variant = Variant::prefer_restricted,
                                        bool allow_composite = false) {
  RimRemarkReport rep;
  rep.n = n;
  OrbitTrace trace;
  try {
    trace = sign_orbit(n, std::nullopt, variant, allow_composite);
  } catch (const StepError& e) {
    rep.step_error = e.what();
    return rep;
  }
  for (const auto& run : detail::state_runs(trace)) {
    for (std::size_t k = run.begin; k < run.end; ++k) {
      const Partition& P = trace.steps[k].post;
      RimRemarkRow row;
      row.wall = trace.steps[k].wall;
      row.state = P;
      row.lower = run.lower;
      row.upper = run.upper;
      row.interior = run.lower < row.wall;
      const int bj = static_cast<int>(run.upper.b);
      const int bi = static_cast<int>(run.lower.b);
      if (bj >= 2 && !P.empty()) {
        auto strip = e_rim(P, bj);
        row.upper_rim = strip == rim_without_top_row(P);
        row.remainder_two_sizes = distinct_part_sizes(remove_boxes(P, strip)) <= 2;
      }
      if (bi >= 2 && !P.empty()) {
        Partition Pt = transpose(P);
        row.lower_rim_transposed = e_rim(Pt, bi) == rim_without_top_row(Pt);
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Good-box difference of first-row pairs

enum class GoodSense { direct, conjugate };
enum class GoodBase { upcoming, last_crossed };

struct Semantics {
  GoodSense sense = GoodSense::direct;
  GoodBase base = GoodBase::upcoming;
  friend bool operator==(const Semantics&, const Semantics&) = default;

  std::string str() const {
    return std::string(sense == GoodSense::direct ? "direct" : "conjugate") + "/" +
           (base == GoodBase::upcoming ? "upcoming" : "last-crossed");
  }
};

inline const std::array<Semantics, 4> kAllSemantics{{
    {GoodSense::direct, GoodBase::upcoming},
    {GoodSense::conjugate, GoodBase::upcoming},
    {GoodSense::direct, GoodBase::last_crossed},
    {GoodSense::conjugate, GoodBase::last_crossed},
}};

inline Semantics parse_semantics(std::string_view s) {
  for (const auto& sem : kAllSemantics)
    if (sem.str() == s) return sem;
  throw InvalidArgument("unknown semantics '" + std::string(s) + "'");
}

struct GoodBoxChamber {
  std::optional<Wall> lower;  // unset for the first chamber
  std::optional<Wall> upper;  // unset for the final chamber
  Partition smaller;
  Partition larger;
  /// The single box larger \ smaller, unset on a mismatch.
  std::optional<Box> diff;
  /// One entry per requested semantics; unset when that base does not exist
  /// (no upcoming wall in the final chamber, nothing crossed in the first).
  std::vector<std::optional<bool>> good;

  bool is_final() const { return !upper; }
};

struct GoodBoxDiffReport {
  Partition smaller;
  Partition larger;
  std::vector<Semantics> semantics;
  std::vector<GoodBoxChamber> chambers;
  std::optional<std::string> step_error;
  std::optional<std::string> mismatch;

  /// No step error and one-box difference in every chamber.
  bool hard_ok() const { return !step_error && !mismatch; }

  /// Every non-final chamber passes under semantics index k (when requested).
  bool nonfinal_good(std::size_t k) const {
    if (!hard_ok()) return false;
    for (const auto& ch : chambers)
      if (!ch.is_final() && ch.good[k] && !*ch.good[k]) return false;
    return true;
  }
};

/// The unique box of `larger` outside `smaller`, when larger is smaller plus
/// one box.
inline std::optional<Box> single_box_difference(const Partition& smaller,
                                                const Partition& larger) {
  if (larger.size() != smaller.size() + 1 || larger.length() < smaller.length())
    return std::nullopt;
  std::optional<Box> found;
  for (int r = 1; r <= larger.length(); ++r) {
    int d = larger.row(r) - smaller.row(r);
    if (d < 0 || d > 1) return std::nullopt;
    if (d == 1) {
      if (found) return std::nullopt;
      found = Box{r, larger.row(r)};
    }
  }
  return found;
}

inline bool good_under(const Partition& smaller, const Box& box, int e, GoodSense sense) {
  if (sense == GoodSense::direct) return is_good_addable(smaller, box, e);
  return is_good_addable(transpose(smaller), Box{box.col, box.row}, e);
}

/// Evolves lambda (walls of order |lambda|) and lambda plus a first-row box
/// (walls of order |lambda|+1) through one merged ascending sweep and
/// inspects their difference in every chamber.
inline GoodBoxDiffReport goodbox_pair(const Partition& lambda,
                                      const std::vector<Semantics>& semantics,
                                      Variant variant = Variant::automatic) {
  if (lambda.empty()) throw InvalidArgument("goodbox_pair needs a nonempty partition");
  GoodBoxDiffReport rep;
  rep.smaller = lambda;
  rep.larger = lambda.with_box({1, lambda.row(1) + 1});
  rep.semantics = semantics;
  const int m = rep.larger.size();
  std::vector<Wall> walls = farey_walls(m);  // order m-1 walls are a subset

  Partition small = rep.smaller, large = rep.larger;
  std::optional<Wall> last;
  for (std::size_t k = 0; k <= walls.size(); ++k) {
    GoodBoxChamber ch;
    ch.lower = last;
    if (k < walls.size()) ch.upper = walls[k];
    ch.smaller = small;
    ch.larger = large;
    ch.diff = single_box_difference(small, large);
    if (ch.diff) {
      for (const auto& sem : semantics) {
        std::optional<Wall> w = sem.base == GoodBase::upcoming ? ch.upper : ch.lower;
        if (!w) {
          ch.good.emplace_back();
          continue;
        }
        ch.good.emplace_back(good_under(small, *ch.diff, w->base(), sem.sense));
      }
    } else {
      ch.good.assign(semantics.size(), std::nullopt);
      if (!rep.mismatch)
        rep.mismatch = "after " + (last ? last->str() : std::string("start")) + ": " +
                       large.str() + " is not " + small.str() + " plus one box";
    }
    rep.chambers.push_back(std::move(ch));
    if (k == walls.size()) break;

    const Wall& w = walls[k];
    try {
      if (w.b <= m - 1) small = cross_wall(small, w, variant).post;
      large = cross_wall(large, w, variant).post;
    } catch (const StepError& e) {
      rep.step_error = e.what();
      break;
    }
    last = w;
  }
  return rep;
}

/// All first-row pairs (lambda, lambda + (1, lambda_1 + 1)) with |lambda| = m-1.
inline std::vector<GoodBoxDiffReport> check_goodbox_conjecture(
    int m, const std::vector<Semantics>& semantics, Variant variant = Variant::automatic) {
  if (m < 2) throw InvalidArgument("check_goodbox_conjecture needs m >= 2");
  std::vector<GoodBoxDiffReport> out;
  for_each_partition(m - 1, [&](const Partition& lambda) {
    out.push_back(goodbox_pair(lambda, semantics, variant));
  });
  return out;
}

}  // namespace wallcross

#endif  // WALLCROSS_CONJECTURES_HPP_
