#ifndef WALLCROSS_SWEEP_HPP_
#define WALLCROSS_SWEEP_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wallcross/farey.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/regular_order.hpp"
#include "wallcross/wallcross.hpp"

namespace wallcross {

/// Worker count: explicit value if positive, else $WALLCROSS_JOBS, else the
/// hardware concurrency.
inline unsigned resolve_jobs(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("WALLCROSS_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies fn to every unit with up to `jobs` workers. Results are stored by
/// unit index, so the output never depends on scheduling. The first exception
/// thrown by fn is rethrown after all workers finish.
template <class Unit, class Fn>
auto parallel_map(const std::vector<Unit>& units, unsigned jobs, Fn fn) {
  using Result = decltype(fn(units.front()));
  std::vector<std::optional<Result>> slots(units.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < units.size();) {
      try {
        slots[k].emplace(fn(units[k]));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(units.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(units.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// An orbit, or the error that stopped it (the partial trace is kept).
struct OrbitOutcome {
  OrbitTrace trace;
  std::optional<std::string> error;
};

inline OrbitOutcome orbit_outcome(const Partition& p, Wall upper, Variant variant, Mode mode) {
  OrbitOutcome out;
  out.trace = OrbitTrace{p, mode, {}};
  if (p.size() < 1) return out;
  try {
    run_walls(out.trace, farey_walls(p.size(), upper), variant);
  } catch (const StepError& e) {
    out.error = e.what();
  }
  return out;
}

/// Orbits of every partition of n, in enumeration order.
inline std::vector<OrbitOutcome> orbit_all(int n, Wall upper, Variant variant, Mode mode,
                                           unsigned jobs) {
  std::vector<Partition> starts = enumerate_partitions(n);
  return parallel_map(starts, jobs, [&](const Partition& p) {
    return orbit_outcome(p, upper, variant, mode);
  });
}

struct ChamberCheckRow {
  int n = 0;
  std::size_t chambers = 0;
  bool passed = true;
  std::optional<std::string> failure;  // first failing wall with the three states
  double seconds = 0;
};

/// For one n: orbit of the row (n) versus the n smallest boxes versus the
/// cascade of column regularizations, chamber by chamber.
inline ChamberCheckRow verify_chambers_for(int n, TieBreak tie = TieBreak::shallow_first) {
  auto t0 = std::chrono::steady_clock::now();
  ChamberCheckRow row;
  row.n = n;
  std::vector<Wall> walls = farey_walls(n);
  std::vector<Wall> chambers = walls;
  chambers.push_back(kTerminalWall);  // chamber k lies just left of chambers[k]
  row.chambers = chambers.size();

  Partition orbit{n};
  Partition cascade{n};
  for (std::size_t k = 0; k < chambers.size(); ++k) {
    if (k > 0) {
      orbit = cross_wall(orbit, walls[k - 1], Variant::regular).post;
      cascade = rc_regularize(cascade, walls[k - 1]);
    }
    Partition formula;
    std::string formula_str;
    try {
      formula = chamber_partition(n, chambers[k], tie);
      formula_str = formula.str();
    } catch (const NotAYoungDiagram&) {
      formula_str = "not-a-diagram";
    }
    if (orbit != formula || cascade != formula || formula_str == "not-a-diagram") {
      row.passed = false;
      row.failure = "n=" + std::to_string(n) + " left of " + chambers[k].str() +
                    ": orbit " + orbit.str() + ", chamber " + formula_str + ", cascade " +
                    cascade.str();
      break;
    }
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline std::vector<ChamberCheckRow> run_verify_chambers(int n_max, unsigned jobs = 1,
                                                    TieBreak tie = TieBreak::shallow_first) {
  if (n_max < 1) throw InvalidArgument("verify-thm2 needs n_max >= 1");
  std::vector<int> ns;
  for (int n = 1; n <= n_max; ++n) ns.push_back(n);
  return parallel_map(ns, jobs, [tie](int n) {
    try {
      return verify_chambers_for(n, tie);
    } catch (const std::exception& e) {
      ChamberCheckRow row;
      row.n = n;
      row.passed = false;
      row.failure = e.what();
      return row;
    }
  });
}

}  // namespace wallcross

#endif  // WALLCROSS_SWEEP_HPP_
