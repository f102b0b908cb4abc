#ifndef WALLCROSS_WALLCROSS_HPP_
#define WALLCROSS_WALLCROSS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wallcross/farey.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/partition.hpp"

namespace wallcross {

/// Which Mullineux map a step may use.
///   regular / restricted: only that one.
///   automatic: regular when the state is b-regular, else restricted.
///   prefer_restricted: restricted when b-restricted, else regular.
enum class Variant { regular, restricted, automatic, prefer_restricted };

enum class Mode { crossing, plain };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::regular: return "regular";
    case Variant::restricted: return "restricted";
    case Variant::automatic: return "auto";
    case Variant::prefer_restricted: return "prefer-restricted";
  }
  return "?";
}

inline const char* to_string(Mode m) { return m == Mode::crossing ? "crossing" : "plain"; }

inline Variant parse_variant(std::string_view s) {
  if (s == "regular") return Variant::regular;
  if (s == "restricted") return Variant::restricted;
  if (s == "auto") return Variant::automatic;
  if (s == "prefer-restricted") return Variant::prefer_restricted;
  throw InvalidArgument("unknown variant '" + std::string(s) + "'");
}

inline Mode parse_mode(std::string_view s) {
  if (s == "crossing") return Mode::crossing;
  if (s == "plain") return Mode::plain;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

struct StepRecord {
  Wall wall;
  int base = 0;
  /// The map actually applied: Variant::regular or Variant::restricted.
  Variant variant = Variant::regular;
  Partition pre;
  Partition image;
  Partition post;
  /// Under `automatic`, when both maps apply and disagree: the restricted image.
  std::optional<Partition> restricted_alternative;
};

struct OrbitTrace {
  Partition start;
  Mode mode = Mode::crossing;
  std::vector<StepRecord> steps;

  const Partition& final_state() const { return steps.empty() ? start : steps.back().post; }

  /// States joined by arrows, e.g. "[3]->[2,1]->[2,1]->[1,1,1]".
  std::string states_string() const {
    std::string s = start.str();
    for (const auto& st : steps) s += "->" + st.post.str();
    return s;
  }
};

/// The state is neither b-regular nor b-restricted (or not the kind the
/// requested variant needs), so no Mullineux map applies at this wall.
class StepError : public std::runtime_error {
 public:
  StepError(const std::string& what, Wall wall, Partition state)
      : std::runtime_error(what), wall_(wall), state_(std::move(state)) {}
  const Wall& wall() const { return wall_; }
  const Partition& state() const { return state_; }

 private:
  Wall wall_;
  Partition state_;
};

/// Applies the base-b Mullineux map chosen by `variant`; in crossing mode the
/// result is transposed afterwards (t o M).
inline StepRecord cross_wall(const Partition& p, const Wall& w, Variant variant,
                             Mode mode = Mode::crossing) {
  const int e = w.base();
  if (e < 2) throw InvalidArgument("cannot cross wall " + w.str());
  const bool reg = is_regular(p, e);
  const bool res = is_restricted(p, e);
  StepRecord rec;
  rec.wall = w;
  rec.base = e;
  rec.pre = p;
  auto fail = [&](const char* need) {
    throw StepError(p.str() + " is not " + std::to_string(e) + "-" + need + " at wall " + w.str(),
                    w, p);
  };
  switch (variant) {
    case Variant::regular:
      if (!reg) fail("regular");
      rec.variant = Variant::regular;
      break;
    case Variant::restricted:
      if (!res) fail("restricted");
      rec.variant = Variant::restricted;
      break;
    case Variant::automatic:
      if (!reg && !res) fail("regular or restricted");
      rec.variant = reg ? Variant::regular : Variant::restricted;
      break;
    case Variant::prefer_restricted:
      if (!reg && !res) fail("regular or restricted");
      rec.variant = res ? Variant::restricted : Variant::regular;
      break;
  }
  rec.image = rec.variant == Variant::regular ? mullineux(p, e) : mullineux_restricted(p, e);
  if (variant == Variant::automatic && reg && res) {
    Partition alt = mullineux_restricted(p, e);
    if (alt != rec.image) rec.restricted_alternative = std::move(alt);
  }
  rec.post = mode == Mode::crossing ? transpose(rec.image) : rec.image;
  return rec;
}

/// Crosses the given walls in ascending order. On a failing step the partial
/// trace is kept in `trace` and StepError propagates.
inline void run_walls(OrbitTrace& trace, const std::vector<Wall>& walls, Variant variant) {
  Partition state = trace.final_state();
  for (const Wall& w : walls) {
    trace.steps.push_back(cross_wall(state, w, variant, trace.mode));
    state = trace.steps.back().post;
  }
}

/// Crosses every Farey wall of order |p| below `upper`, smallest wall first,
/// applying t o M_b at each.
inline OrbitTrace compose_orbit(const Partition& p, Wall upper = kTerminalWall,
                                Variant variant = Variant::automatic,
                                Mode mode = Mode::crossing) {
  OrbitTrace trace{p, mode, {}};
  if (p.size() >= 1) run_walls(trace, farey_walls(p.size(), upper), variant);
  return trace;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Plain-mode orbit of the column 1^n. With `through` set to a Farey wall r,
/// crosses every wall up to and including r (the N_r composition); otherwise
/// all walls in (0,1).
inline OrbitTrace sign_orbit(int n, std::optional<Wall> through = std::nullopt,
                             Variant variant = Variant::prefer_restricted,
                             bool allow_composite = false) {
  if (n < 1) throw InvalidArgument("sign_orbit needs n >= 1");
  if (!allow_composite && !is_prime(n))
    throw InvalidArgument(std::to_string(n) + " is not prime");
  OrbitTrace trace{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Mode::plain, {}};
  std::vector<Wall> walls = farey_walls(n);
  if (through) {
    if (through->is_terminal() || through->b > n)
      throw InvalidArgument(through->str() + " is not a Farey term of order " + std::to_string(n));
    std::erase_if(walls, [&](const Wall& w) { return w > *through; });
  }
  run_walls(trace, walls, variant);
  return trace;
}

}  // namespace wallcross

#endif  // WALLCROSS_WALLCROSS_HPP_
