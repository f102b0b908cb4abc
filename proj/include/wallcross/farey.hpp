#ifndef WALLCROSS_FAREY_HPP_
#define WALLCROSS_FAREY_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "wallcross/partition.hpp"

namespace wallcross {

/// A reduced fraction a/b in (0,1]. The denominator is the Mullineux base used
/// when crossing this wall; 1/1 only appears as the virtual terminal wall.
struct Wall {
  std::int64_t a = 1;
  std::int64_t b = 1;

  constexpr int base() const { return static_cast<int>(b); }
  constexpr bool is_terminal() const { return a == b; }

  std::string str() const { return std::to_string(a) + "/" + std::to_string(b); }

  friend constexpr bool operator==(const Wall& l, const Wall& r) { return l.a * r.b == r.a * l.b; }
  friend constexpr std::strong_ordering operator<=>(const Wall& l, const Wall& r) {
    return l.a * r.b <=> r.a * l.b;
  }
};

inline constexpr Wall kTerminalWall{1, 1};

inline Wall make_wall(std::int64_t a, std::int64_t b) {
  if (b <= 0 || a <= 0 || a > b)
    throw InvalidArgument("wall must lie in (0,1], got " + std::to_string(a) + "/" +
                          std::to_string(b));
  std::int64_t g = std::gcd(a, b);
  return {a / g, b / g};
}

/// Parses "a/b". Non-reduced input is reduced; when that happens and
/// `warning` is non-null a message is stored there. A bare "1" is the
/// terminal wall.
inline Wall parse_wall(std::string_view text, std::string* warning = nullptr) {
  std::string s(text);
  auto slash = s.find('/');
  std::int64_t a = 0;
  std::int64_t b = 1;
  try {
    std::size_t pos = 0;
    if (slash == std::string::npos) {
      a = std::stoll(s, &pos);
      if (pos != s.size()) throw InvalidArgument("");
    } else {
      std::string num = s.substr(0, slash);
      std::string den = s.substr(slash + 1);
      a = std::stoll(num, &pos);
      if (pos != num.size()) throw InvalidArgument("");
      b = std::stoll(den, &pos);
      if (pos != den.size()) throw InvalidArgument("");
    }
  } catch (const std::exception&) {
    throw InvalidArgument("bad wall '" + s + "', expected a/b");
  }
  Wall w = make_wall(a, b);
  if (w.b != b && warning) *warning = "wall " + s + " reduced to " + w.str();
  return w;
}

/// True iff w1 < w2 are Farey neighbours (a2*b1 - a1*b2 == 1).
inline bool neighbor_check(const Wall& w1, const Wall& w2) { return w2.a * w1.b - w1.a * w2.b == 1; }

/// All reduced fractions with denominator <= n strictly between 0 and
/// `upper`, ascending. Each term comes from the previous two by the usual
/// next-term recurrence.
inline std::vector<Wall> farey_walls(int n, Wall upper = kTerminalWall) {
  if (n < 1) throw InvalidArgument("Farey order must be >= 1");
  if (upper.a <= 0 || upper.a > upper.b) throw InvalidArgument("upper must lie in (0,1]");
  std::vector<Wall> out;
  std::int64_t a = 0, b = 1, c = 1, d = n;
  while (c < d) {
    Wall w{c, d};
    if (!(w < upper)) break;
    out.push_back(w);
    std::int64_t k = (n + b) / d;
    std::int64_t nc = k * c - a, nd = k * d - b;
    a = c;
    b = d;
    c = nc;
    d = nd;
  }
  return out;
}

/// Walls that are Farey terms of order n, plus the terminal 1/1.
inline bool is_wall_of_order(const Wall& w, int n) { return w.is_terminal() || w.b <= n; }

}  // namespace wallcross

#endif  // WALLCROSS_FAREY_HPP_
