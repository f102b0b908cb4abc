#ifndef WALLCROSS_CRYSTAL_HPP_
#define WALLCROSS_CRYSTAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wallcross/partition.hpp"

namespace wallcross {

enum class Sign : char { addable = '+', removable = '-' };

struct SignatureEntry {
  Box box;
  Sign sign;
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

/// Residue-i addable (+) and removable (-) boxes of a partition, read
/// bottom-to-top (strictly decreasing row).
struct SignatureWord {
  int base = 2;
  int residue = 0;
  std::vector<SignatureEntry> entries;

  std::string str() const {
    std::string s;
    for (const auto& en : entries) s += static_cast<char>(en.sign);
    return s;
  }
};

namespace detail {
inline void require_residue(int e, int i) {
  require_base(e);
  if (i < 0 || i >= e)
    throw InvalidArgument("residue " + std::to_string(i) + " outside [0," + std::to_string(e) + ")");
}
}  // namespace detail

/// The full (unreduced) bottom-to-top word.
inline SignatureWord signature(const Partition& p, int e, int i) {
  detail::require_residue(e, i);
  SignatureWord w{e, i, {}};
  for (int r = p.length() + 1; r >= 1; --r) {
    int len = p.row(r);
    // for e >= 2 the addable and removable box of one row never share a residue
    if (r == 1 || p.row(r - 1) > len) {
      Box b{r, len + 1};
      if (residue(b, e) == i) w.entries.push_back({b, Sign::addable});
    }
    if (len > p.row(r + 1)) {
      Box b{r, len};
      if (residue(b, e) == i) w.entries.push_back({b, Sign::removable});
    }
  }
  return w;
}

/// Cancels adjacent "-+" pairs until none remain; the result reads +^a -^b.
inline SignatureWord reduced_signature(const Partition& p, int e, int i) {
  SignatureWord full = signature(p, e, i);
  SignatureWord out{e, i, {}};
  for (const auto& en : full.entries) {
    if (en.sign == Sign::addable && !out.entries.empty() &&
        out.entries.back().sign == Sign::removable)
      out.entries.pop_back();
    else
      out.entries.push_back(en);
  }
  return out;
}

/// Lowest surviving removable box of residue i.
inline std::optional<Box> good_removable(const Partition& p, int e, int i) {
  for (const auto& en : reduced_signature(p, e, i).entries)
    if (en.sign == Sign::removable) return en.box;
  return std::nullopt;
}

/// Topmost surviving addable box of residue i.
inline std::optional<Box> good_addable(const Partition& p, int e, int i) {
  std::optional<Box> last;
  for (const auto& en : reduced_signature(p, e, i).entries)
    if (en.sign == Sign::addable) last = en.box;
  return last;
}

/// Whether `b` is the good addable box of its own residue.
inline bool is_good_addable(const Partition& p, const Box& b, int e) {
  auto g = good_addable(p, e, residue(b, e));
  return g && *g == b;
}

}  // namespace wallcross

#endif  // WALLCROSS_CRYSTAL_HPP_
