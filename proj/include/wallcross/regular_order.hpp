#ifndef WALLCROSS_REGULAR_ORDER_HPP_
#define WALLCROSS_REGULAR_ORDER_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wallcross/farey.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

/// A box set that was expected to be a Young diagram is not one.
class NotAYoungDiagram : public std::runtime_error {
 public:
  NotAYoungDiagram(const std::string& what, std::optional<std::int64_t> ladder = std::nullopt)
      : std::runtime_error(what), ladder_(ladder) {}
  /// Ladder value whose sliding broke the shape, when known.
  std::optional<std::int64_t> ladder() const { return ladder_; }

 private:
  std::optional<std::int64_t> ladder_;
};

/// How boxes with equal f-value are ranked.
///   shallow_first: the box in the higher row (larger y) is smaller.
///   paper_literal: the box with larger y is larger.
enum class TieBreak { shallow_first, paper_literal };

inline const char* to_string(TieBreak t) {
  return t == TieBreak::shallow_first ? "shallow" : "paper";
}

/// Linear form a*x - (b-a)*y at the quadrant point (x,y) = (col,-row).
inline std::int64_t f_ab(const Wall& w, const Box& box) {
  return w.a * box.x() - (w.b - w.a) * box.y();
}

inline std::strong_ordering box_cmp(const Wall& w, const Box& b1, const Box& b2,
                                    TieBreak tie = TieBreak::shallow_first) {
  if (auto c = f_ab(w, b1) <=> f_ab(w, b2); c != 0) return c;
  // equal f-values on distinct boxes always sit in distinct rows
  return tie == TieBreak::shallow_first ? b1.row <=> b2.row : b2.row <=> b1.row;
}

/// The n smallest boxes under the wall order, as a partition.
inline Partition chamber_partition(int n, const Wall& w, TieBreak tie = TieBreak::shallow_first) {
  if (n < 1) throw InvalidArgument("chamber_partition needs n >= 1");
  if (!is_wall_of_order(w, n))
    throw InvalidArgument("wall " + w.str() + " is not a Farey term of order " + std::to_string(n));
  std::vector<Box> cells;
  // every cell of an n-box diagram has row + col <= n + 1
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c <= n + 1; ++c) cells.push_back({r, c});
  auto mid = cells.begin() + n;
  std::partial_sort(cells.begin(), mid, cells.end(),
                    [&](const Box& x, const Box& y) { return box_cmp(w, x, y, tie) < 0; });
  cells.erase(mid, cells.end());
  Partition out;
  if (!boxes_to_partition(cells, out))
    throw NotAYoungDiagram("the " + std::to_string(n) + " smallest boxes for wall " + w.str() +
                           " (tie " + to_string(tie) + ") are not a Young diagram");
  return out;
}

/// Quadrant cells sharing f_ab with `through`, row and column within
/// [1, bound], shallowest first.
inline std::vector<Box> ladder_positions(const Wall& w, const Box& through, int bound) {
  std::vector<Box> out;
  const std::int64_t c = f_ab(w, through);
  for (int r = 1; r <= bound; ++r) {
    std::int64_t rest = c - (w.b - w.a) * r;
    if (rest < w.a || rest % w.a != 0) continue;
    std::int64_t col = rest / w.a;
    if (col > bound) continue;
    out.push_back({r, static_cast<int>(col)});
  }
  return out;
}

/// Generalized column regularization at a wall a/b < 1: on every ladder the
/// boxes of p slide to the deepest positions of that ladder.
inline Partition rc_regularize(const Partition& p, const Wall& w) {
  if (w.is_terminal()) throw InvalidArgument("rc_regularize needs a wall below 1");
  std::map<std::int64_t, int> counts;
  for (const Box& b : p.boxes()) ++counts[f_ab(w, b)];
  std::vector<Box> cells;
  cells.reserve(static_cast<std::size_t>(p.size()));
  for (auto [value, k] : counts) {
    // ladder rows satisfy (b-a)*row <= value - a, so this bound covers the whole ladder
    int deepest_row = static_cast<int>((value - w.a) / (w.b - w.a));
    std::vector<Box> slots;
    for (int r = deepest_row; r >= 1 && static_cast<int>(slots.size()) < k; --r) {
      std::int64_t rest = value - (w.b - w.a) * r;
      if (rest >= w.a && rest % w.a == 0) slots.push_back({r, static_cast<int>(rest / w.a)});
    }
    if (static_cast<int>(slots.size()) < k)
      throw NotAYoungDiagram("ladder " + std::to_string(value) + " too short", value);
    cells.insert(cells.end(), slots.begin(), slots.end());
  }
  Partition out;
  if (!boxes_to_partition(cells, out)) {
    // name the first ladder whose slid boxes are not supported
    std::sort(cells.begin(), cells.end());
    for (const Box& b : cells) {
      bool left = b.col == 1 || std::binary_search(cells.begin(), cells.end(), Box{b.row, b.col - 1});
      bool up = b.row == 1 || std::binary_search(cells.begin(), cells.end(), Box{b.row - 1, b.col});
      if (!left || !up)
        throw NotAYoungDiagram("sliding " + p.str() + " at wall " + w.str() +
                                   " breaks the shape on ladder " + std::to_string(f_ab(w, b)),
                               f_ab(w, b));
    }
    throw NotAYoungDiagram("sliding " + p.str() + " at wall " + w.str() + " breaks the shape");
  }
  return out;
}

struct Lemma1Result {
  bool neighbors = true;
  /// Boxes (b1, b2) with f_w1(b1) < f_w1(b2) but f_w2(b1) > f_w2(b2).
  std::optional<std::pair<Box, Box>> counterexample;

  bool passed() const { return !counterexample; }
};

/// Size of the smallest Young diagram containing both boxes.
inline int joint_diagram_size(const Box& b1, const Box& b2) {
  return b1.row * b1.col + b2.row * b2.col -
         std::min(b1.row, b2.row) * std::min(b1.col, b2.col);
}

/// Looks for a pair of cells lying together in some n-box diagram whose
/// f-order strictly reverses between w1 and w2. Non-neighbour pairs are
/// allowed and flagged.
inline Lemma1Result lemma1_no_crossing(const Wall& w1, const Wall& w2, int n) {
  if (!(w1 < w2)) throw InvalidArgument("lemma1_no_crossing needs w1 < w2");
  Lemma1Result res;
  res.neighbors = neighbor_check(w1, w2);
  std::vector<Box> cells;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; r + c - 1 <= n; ++c) cells.push_back({r, c});
  for (const Box& b1 : cells)
    for (const Box& b2 : cells)
      if (joint_diagram_size(b1, b2) <= n && f_ab(w1, b1) < f_ab(w1, b2) &&
          f_ab(w2, b1) > f_ab(w2, b2)) {
        res.counterexample = {b1, b2};
        return res;
      }
  return res;
}

}  // namespace wallcross

#endif  // WALLCROSS_REGULAR_ORDER_HPP_
