#ifndef WALLCROSS_MULLINEUX_HPP_
#define WALLCROSS_MULLINEUX_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallcross/crystal.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

/// Internal consistency failure (a crystal step the theory guarantees did not
/// exist). Never expected; signals a convention error.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sizes of successive e-rims (a) and row counts at the time of stripping (r).
struct MullineuxSymbol {
  int base = 2;
  std::vector<int> a;
  std::vector<int> r;

  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;

  std::string str() const {
    std::string top, bot;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k) {
        top += ',';
        bot += ',';
      }
      top += std::to_string(a[k]);
      bot += std::to_string(r[k]);
    }
    return "(" + top + ";" + bot + ")";
  }
};

/// The e-rim: the rim walked in segments of e boxes, each new segment starting
/// on the row below where the previous one filled up. The last segment may be
/// short.
inline std::vector<Box> e_rim(const Partition& p, int e) {
  require_base(e);
  if (p.empty()) throw InvalidArgument("e_rim of the empty partition");
  std::vector<Box> path = rim(p);
  std::vector<Box> out;
  std::size_t k = 0;
  const auto step = static_cast<std::size_t>(e);
  while (k < path.size()) {
    std::size_t end = std::min(k + step, path.size());
    out.insert(out.end(), path.begin() + static_cast<std::ptrdiff_t>(k),
               path.begin() + static_cast<std::ptrdiff_t>(end));
    if (end - k < step) break;
    int filled_row = path[end - 1].row;
    k = end;
    while (k < path.size() && path[k].row == filled_row) ++k;
  }
  return out;
}

inline MullineuxSymbol mullineux_symbol(Partition p, int e) {
  if (!is_regular(p, e))
    throw InvalidArgument(p.str() + " is not " + std::to_string(e) + "-regular");
  MullineuxSymbol sym{e, {}, {}};
  while (!p.empty()) {
    std::vector<Box> strip = e_rim(p, e);
    sym.a.push_back(static_cast<int>(strip.size()));
    sym.r.push_back(p.length());
    p = remove_boxes(p, strip);
  }
  return sym;
}

namespace detail {

/// Residues of the good boxes removed while stripping p to empty, always
/// taking the smallest residue that has one. First removal first.
inline std::vector<int> strip_good_residues(Partition p, int e) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(p.size()));
  while (!p.empty()) {
    std::optional<Box> box;
    int i = 0;
    for (; i < e && !box; ++i) box = good_removable(p, e, i);
    if (!box) throw ConventionError("no good removable box in nonempty " + p.str());
    seq.push_back(i - 1);
    p = p.without_box(*box);
  }
  return seq;
}

inline Partition rebuild_conjugate(const std::vector<int>& seq, int e) {
  Partition q;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    int want = (e - *it) % e;
    auto g = good_addable(q, e, want);
    if (!g)
      throw ConventionError("missing good addable box of residue " + std::to_string(want) +
                            " on " + q.str() + " (base " + std::to_string(e) + ")");
    q = q.with_box(*g);
  }
  return q;
}

}  // namespace detail

/// The e-Mullineux involution on e-regular partitions, by good-box recursion:
/// strip a good removable box of the smallest available residue i, map the
/// rest, then add back the good addable box of residue -i.
inline Partition mullineux(const Partition& p, int e) {
  if (!is_regular(p, e))
    throw InvalidArgument(p.str() + " is not " + std::to_string(e) + "-regular");
  auto seq = detail::strip_good_residues(p, e);
  return detail::rebuild_conjugate(seq, e);
}

/// Same recursion, but the top-level strip uses the residue at `option`
/// among those with a good removable box (used for choice-independence
/// checks). Returns nullopt when there are not that many options.
inline std::optional<Partition> mullineux_with_first_choice(const Partition& p, int e,
                                                            std::size_t option) {
  if (!is_regular(p, e))
    throw InvalidArgument(p.str() + " is not " + std::to_string(e) + "-regular");
  if (p.empty()) return option == 0 ? std::optional<Partition>(p) : std::nullopt;
  std::vector<std::pair<int, Box>> options;
  for (int i = 0; i < e; ++i)
    if (auto g = good_removable(p, e, i)) options.emplace_back(i, *g);
  if (option >= options.size()) return std::nullopt;
  const auto& [i, box] = options[option];
  Partition rest = mullineux(p.without_box(box), e);
  auto g = good_addable(rest, e, (e - i) % e);
  if (!g) throw ConventionError("missing good addable box on " + rest.str());
  return rest.with_box(*g);
}

/// Conjugated variant on e-restricted partitions: t o M_e o t.
inline Partition mullineux_restricted(const Partition& p, int e) {
  if (!is_restricted(p, e))
    throw InvalidArgument(p.str() + " is not " + std::to_string(e) + "-restricted");
  return transpose(mullineux(transpose(p), e));
}

/// Checks the symbol law: same rim sizes, and row counts of the image equal
/// a_i - r_i + eps_i (eps_i = 0 when e divides a_i, else 1).
inline bool symbol_certificate(const Partition& p, const Partition& image, int e) {
  if (p.size() != image.size()) throw InvalidArgument("certificate needs partitions of equal size");
  MullineuxSymbol src = mullineux_symbol(p, e);
  MullineuxSymbol dst = mullineux_symbol(image, e);
  if (src.a != dst.a) return false;
  for (std::size_t k = 0; k < src.a.size(); ++k) {
    int eps = src.a[k] % e == 0 ? 0 : 1;
    if (dst.r[k] != src.a[k] - src.r[k] + eps) return false;
  }
  return true;
}

}  // namespace wallcross

#endif  // WALLCROSS_MULLINEUX_HPP_
