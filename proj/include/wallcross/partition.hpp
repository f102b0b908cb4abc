#ifndef WALLCROSS_PARTITION_HPP_
#define WALLCROSS_PARTITION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wallcross {

/// Raised on malformed input or violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell of a Young diagram, rows numbered top-down and columns left-right,
/// both starting at 1.
struct Box {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const Box&, const Box&) = default;

  /// Fourth-quadrant embedding: (x, y) = (col, -row).
  constexpr int x() const { return col; }
  constexpr int y() const { return -row; }

  std::string str() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

inline void require_base(int e) {
  if (e < 2) throw InvalidArgument("base e must be >= 2, got " + std::to_string(e));
}

/// Residue (col - row) mod e of a box.
inline int residue(const Box& b, int e) {
  require_base(e);
  int r = (b.col - b.row) % e;
  return r < 0 ? r + e : r;
}

/// Weakly decreasing sequence of positive parts. Trailing zeros are never
/// stored; the empty partition is a valid value.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw InvalidArgument("partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw InvalidArgument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row length, zero beyond the last row.
  int row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 1; r <= length(); ++r)
      for (int c = 1; c <= row(r); ++c) out.push_back({r, c});
    return out;
  }

  Partition with_box(const Box& b) const;
  Partition without_box(const Box& b) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const Box& b) { return os << b.str(); }

inline Partition Partition::with_box(const Box& b) const {
  std::vector<int> rows = parts_;
  if (b.row == length() + 1 && b.col == 1) {
    rows.push_back(1);
  } else if (b.row >= 1 && b.row <= length() && b.col == row(b.row) + 1 &&
             (b.row == 1 || row(b.row - 1) > row(b.row))) {
    ++rows[static_cast<std::size_t>(b.row - 1)];
  } else {
    throw InvalidArgument("box " + b.str() + " is not addable to " + str());
  }
  return Partition(std::move(rows));
}

inline Partition Partition::without_box(const Box& b) const {
  if (!(b.row >= 1 && b.row <= length() && b.col == row(b.row) && row(b.row + 1) < row(b.row)))
    throw InvalidArgument("box " + b.str() + " is not removable from " + str());
  std::vector<int> rows = parts_;
  --rows[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(rows));
}

/// Parses "[3,1]" (whitespace tolerated, brackets optional). "[]" is empty.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidArgument("unterminated partition: " + std::string(text));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("bad partition part '" + tok + "'");
    }
    if (pos != tok.size()) throw InvalidArgument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

/// Exponent notation with part sizes ascending, e.g. [3,3,1,1] -> "1^2 3^2".
inline std::string exponent_string(const Partition& p) {
  std::map<int, int> mult;
  for (int v : p.parts()) ++mult[v];
  std::string out;
  for (auto [v, k] : mult) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "^" + std::to_string(k);
  }
  return out;
}

inline Partition transpose(const Partition& p) {
  std::vector<int> cols;
  if (p.empty()) return Partition();
  cols.reserve(static_cast<std::size_t>(p.row(1)));
  for (int c = 1; c <= p.row(1); ++c) {
    int h = 0;
    while (h < p.length() && p.parts()[static_cast<std::size_t>(h)] >= c) ++h;
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

/// No part value repeated e or more times.
inline bool is_regular(const Partition& p, int e) {
  require_base(e);
  const auto& v = p.parts();
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (static_cast<int>(j - i) >= e) return false;
    i = j;
  }
  return true;
}

/// Consecutive differences (with a trailing zero part) all below e.
inline bool is_restricted(const Partition& p, int e) {
  require_base(e);
  for (int r = 1; r <= p.length(); ++r)
    if (p.row(r) - p.row(r + 1) >= e) return false;
  return true;
}

/// Boxes whose addition gives a partition, by increasing row.
inline std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.length() + 1; ++r)
    if (r == 1 || p.row(r - 1) > p.row(r)) out.push_back({r, p.row(r) + 1});
  return out;
}

/// Boxes whose removal gives a partition, by increasing row.
inline std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.length(); ++r)
    if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
  return out;
}

/// Boxes (i,j) with (i+1,j+1) outside p, in path order: row 1 first, columns
/// decreasing inside a row.
inline std::vector<Box> rim(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.length(); ++r) {
    int lo = std::max(p.row(r + 1), 1);
    for (int c = p.row(r); c >= lo; --c) out.push_back({r, c});
  }
  return out;
}

/// Removes a set of boxes; throws if the remainder is not a partition.
inline Partition remove_boxes(const Partition& p, const std::vector<Box>& cut) {
  std::vector<int> rows = p.parts();
  for (const Box& b : cut) {
    if (!p.contains(b)) throw InvalidArgument("box " + b.str() + " not in " + p.str());
    --rows[static_cast<std::size_t>(b.row - 1)];
  }
  for (int r = 1; r <= p.length(); ++r) {
    // the removed boxes of each row must form its rightmost segment
    int kept = rows[static_cast<std::size_t>(r - 1)];
    for (const Box& b : cut)
      if (b.row == r && b.col <= kept)
        throw InvalidArgument("removing boxes from " + p.str() + " leaves a hole");
  }
  std::vector<int> sorted = rows;
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] < sorted[i + 1] || sorted[i + 1] == 0)
      throw InvalidArgument("removing boxes from " + p.str() + " does not leave a partition");
  return Partition(std::move(sorted));
}

/// Builds the partition whose diagram is exactly the given box set, or returns
/// false when the set is not a Young diagram.
inline bool boxes_to_partition(const std::vector<Box>& cells, Partition& out) {
  std::map<int, std::vector<int>> by_row;
  for (const Box& b : cells) {
    if (b.row < 1 || b.col < 1) return false;
    by_row[b.row].push_back(b.col);
  }
  std::vector<int> rows;
  int expect_row = 1;
  for (auto& [r, cols] : by_row) {
    if (r != expect_row++) return false;
    std::sort(cols.begin(), cols.end());
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (cols[k] != static_cast<int>(k) + 1) return false;
    if (!rows.empty() && rows.back() < static_cast<int>(cols.size())) return false;
    rows.push_back(static_cast<int>(cols.size()));
  }
  out = Partition(std::move(rows));
  return true;
}

/// Visits every partition of n once, in lexicographically descending order.
template <class Fn>
void for_each_partition(int n, Fn&& visit) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (n == 0) {
    visit(Partition());
    return;
  }
  // standard descending-composition successor on a working buffer
  std::vector<int> a{n};
  for (;;) {
    visit(Partition(a));
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) return;
    int k = --a.back();
    ++rem;
    while (rem > k) {
      a.push_back(k);
      rem -= k;
    }
    if (rem > 0) a.push_back(rem);
  }
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

}  // namespace wallcross

#endif  // WALLCROSS_PARTITION_HPP_
