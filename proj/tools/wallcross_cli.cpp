// Command-line front end: single computations (mull, farey, crystal, chamber,
// regularize, orbit) and sweeps (orbit-all, verify-thm2, check-sign,
// check-goodbox).
//
// Exit codes: 0 all checks pass, 1 counterexample found, 2 usage error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wallcross.hpp"

namespace wc = wallcross;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  std::string subcommand;
  std::string format = "text";
  int jobs = 0;
  std::string out;
  std::string tie = "shallow";
  std::string variant;
  std::string partition;
  std::string wall;
  std::string upper;
  std::string mode = "crossing";
  std::vector<int> n_values;
  int n = 0;
  int m = 0;
  int e = 0;
  int residue = -1;
  bool certify = false;
  bool allow_composite = false;
  std::string semantics = "all";

  // jobs is left out on purpose: output must not depend on it
  wc::Json to_json() const {
    wc::Json j;
    j["subcommand"] = subcommand;
    j["format"] = format;
    j["tie"] = tie;
    j["variant"] = variant;
    if (!partition.empty()) j["partition"] = partition;
    if (!wall.empty()) j["wall"] = wall;
    if (!upper.empty()) j["upper"] = upper;
    j["mode"] = mode;
    if (!n_values.empty()) j["n"] = n_values;
    if (n) j["n"] = n;
    if (m) j["m"] = m;
    if (e) j["e"] = e;
    if (residue >= 0) j["i"] = residue;
    if (certify) j["certify"] = true;
    if (allow_composite) j["allow_composite"] = true;
    if (subcommand == "check-goodbox") j["semantics"] = semantics;
    return j;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw wc::InvalidArgument("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

wc::Json envelope(const RunConfig& cfg, wc::Json result) {
  wc::Json j;
  j["tool"] = "wallcross";
  j["version"] = wc::kToolVersion;
  j["config"] = cfg.to_json();
  j["result"] = std::move(result);
  return j;
}

wc::TieBreak parse_tie(const std::string& s) {
  if (s == "shallow") return wc::TieBreak::shallow_first;
  if (s == "paper") return wc::TieBreak::paper_literal;
  throw wc::InvalidArgument("unknown tie mode '" + s + "'");
}

wc::Wall parse_wall_warn(const std::string& s) {
  std::string warning;
  wc::Wall w = wc::parse_wall(s, &warning);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  return w;
}

std::string boxes_str(const std::vector<wc::Box>& boxes) {
  std::string s;
  for (const auto& b : boxes) s += (s.empty() ? "" : " ") + b.str();
  return s;
}

// ---------------------------------------------------------------------------

int run_mull(const RunConfig& cfg, std::ostream& os) {
  wc::Partition p = wc::parse_partition(cfg.partition);
  std::string variant = cfg.variant.empty() ? "regular" : cfg.variant;
  bool restricted = variant == "restricted";
  if (!restricted && variant != "regular")
    throw wc::InvalidArgument("mull --variant must be regular or restricted");
  wc::Partition image = restricted ? wc::mullineux_restricted(p, cfg.e) : wc::mullineux(p, cfg.e);

  wc::Json result;
  result["input"] = wc::to_json(p);
  result["image"] = wc::to_json(image);
  bool agree = true;
  if (cfg.certify) {
    // the symbol law is stated for the regular map; restricted runs are
    // certified on the transposes
    wc::Partition src = restricted ? wc::transpose(p) : p;
    wc::Partition dst = restricted ? wc::transpose(image) : image;
    auto s1 = wc::mullineux_symbol(src, cfg.e);
    auto s2 = wc::mullineux_symbol(dst, cfg.e);
    agree = wc::symbol_certificate(src, dst, cfg.e);
    result["symbol_input"] = wc::to_json(s1);
    result["symbol_image"] = wc::to_json(s2);
    result["certificate"] = agree;
    if (!agree) {
      result["discrepancy"] = {{"recursion_image", wc::to_json(image)},
                               {"note", "symbol law rejects the recursion result; recursion kept"}};
    }
  }
  if (cfg.format == "json") {
    os << envelope(cfg, result).dump(2) << "\n";
  } else {
    os << image.str() << "\n";
    if (cfg.certify) {
      os << "symbol(input) " << result["symbol_input"]["a"].dump() << " "
         << result["symbol_input"]["r"].dump() << "\n";
      os << "symbol(image) " << result["symbol_image"]["a"].dump() << " "
         << result["symbol_image"]["r"].dump() << "\n";
      os << "certificate " << (agree ? "PASS" : "DISCREPANCY") << "\n";
    }
  }
  return agree ? kOk : kInternal;
}

int run_farey(const RunConfig& cfg, std::ostream& os) {
  wc::Wall upper = cfg.upper.empty() ? wc::kTerminalWall : parse_wall_warn(cfg.upper);
  auto walls = wc::farey_walls(cfg.n, upper);
  if (cfg.format == "json") {
    wc::Json arr = wc::Json::array();
    for (const auto& w : walls) arr.push_back(w.str());
    os << envelope(cfg, arr).dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < walls.size(); ++k) os << (k ? " " : "") << walls[k].str();
    os << "\n";
  }
  return kOk;
}

int run_crystal(const RunConfig& cfg, std::ostream& os) {
  wc::Partition p = wc::parse_partition(cfg.partition);
  wc::require_base(cfg.e);
  std::vector<int> residues;
  if (cfg.residue >= 0)
    residues.push_back(cfg.residue);
  else
    for (int i = 0; i < cfg.e; ++i) residues.push_back(i);
  wc::Json arr = wc::Json::array();
  for (int i : residues) {
    auto full = wc::signature(p, cfg.e, i);
    auto red = wc::reduced_signature(p, cfg.e, i);
    auto gr = wc::good_removable(p, cfg.e, i);
    auto ga = wc::good_addable(p, cfg.e, i);
    if (cfg.format == "json") {
      wc::Json j;
      j["residue"] = i;
      j["signature"] = wc::to_json(full);
      j["reduced"] = wc::to_json(red);
      j["good_removable"] = gr ? wc::to_json(*gr) : wc::Json(nullptr);
      j["good_addable"] = ga ? wc::to_json(*ga) : wc::Json(nullptr);
      arr.push_back(std::move(j));
    } else {
      os << "i=" << i << " word " << (full.entries.empty() ? "-" : full.str()) << " ["
         << boxes_str([&] {
              std::vector<wc::Box> b;
              for (auto& en : full.entries) b.push_back(en.box);
              return b;
            }())
         << "] reduced " << (red.entries.empty() ? "(empty)" : red.str())
         << " good_removable " << (gr ? gr->str() : "none") << " good_addable "
         << (ga ? ga->str() : "none") << "\n";
    }
  }
  if (cfg.format == "json") os << envelope(cfg, arr).dump(2) << "\n";
  return kOk;
}

int run_chamber(const RunConfig& cfg, std::ostream& os) {
  wc::Wall w = parse_wall_warn(cfg.wall);
  wc::Partition p = wc::chamber_partition(cfg.n, w, parse_tie(cfg.tie));
  if (cfg.format == "json")
    os << envelope(cfg, wc::to_json(p)).dump(2) << "\n";
  else
    os << p.str() << "\n";
  return kOk;
}

int run_regularize(const RunConfig& cfg, std::ostream& os) {
  wc::Partition p = wc::parse_partition(cfg.partition);
  wc::Wall w = parse_wall_warn(cfg.wall);
  wc::Partition q = wc::rc_regularize(p, w);
  if (cfg.format == "json")
    os << envelope(cfg, wc::to_json(q)).dump(2) << "\n";
  else
    os << q.str() << "\n";
  return kOk;
}

void print_trace_text(const wc::OrbitOutcome& o, std::ostream& os) {
  os << o.trace.start.str() << " (" << wc::to_string(o.trace.mode) << ")\n";
  for (const auto& s : o.trace.steps) {
    os << "  " << s.wall.str() << "  base " << s.base << "  " << wc::to_string(s.variant)
       << "  " << s.pre.str() << " -> M " << s.image.str() << " -> " << s.post.str();
    if (s.restricted_alternative)
      os << "  [restricted map gives " << s.restricted_alternative->str() << "]";
    os << "\n";
  }
  if (o.error) os << "  error: " << *o.error << "\n";
}

wc::Json outcome_json(const wc::OrbitOutcome& o) {
  wc::Json j = wc::to_json(o.trace);
  if (o.error) j["error"] = *o.error;
  return j;
}

int run_orbit(const RunConfig& cfg, std::ostream& os) {
  wc::Partition p = wc::parse_partition(cfg.partition);
  wc::Wall upper = cfg.upper.empty() ? wc::kTerminalWall : parse_wall_warn(cfg.upper);
  wc::Variant v = wc::parse_variant(cfg.variant.empty() ? "auto" : cfg.variant);
  auto o = wc::orbit_outcome(p, upper, v, wc::parse_mode(cfg.mode));
  if (cfg.format == "json")
    os << outcome_json(o).dump() << "\n";
  else
    print_trace_text(o, os);
  return o.error ? kCounterexample : kOk;
}

int run_orbit_all(const RunConfig& cfg, std::ostream& os) {
  wc::Wall upper = cfg.upper.empty() ? wc::kTerminalWall : parse_wall_warn(cfg.upper);
  wc::Variant v = wc::parse_variant(cfg.variant.empty() ? "auto" : cfg.variant);
  auto all = wc::orbit_all(cfg.n, upper, v, wc::parse_mode(cfg.mode), wc::resolve_jobs(cfg.jobs));
  std::size_t errors = 0;
  wc::Json traces = wc::Json::array();
  for (const auto& o : all) {
    errors += o.error ? 1 : 0;
    if (cfg.format == "json") traces.push_back(outcome_json(o));
  }
  if (cfg.format == "json") {
    wc::Json result;
    result["count"] = all.size();
    result["errors"] = errors;
    result["traces"] = std::move(traces);
    os << envelope(cfg, result).dump() << "\n";
  } else {
    for (const auto& o : all) print_trace_text(o, os);
    os << all.size() << " traces, " << errors << " stopped by a step error\n";
  }
  return errors ? kCounterexample : kOk;
}

int run_verify_thm2(const RunConfig& cfg, std::ostream& os) {
  auto rows = wc::run_verify_chambers(cfg.n, wc::resolve_jobs(cfg.jobs), parse_tie(cfg.tie));
  bool ok = true;
  wc::Json arr = wc::Json::array();
  for (const auto& r : rows) {
    ok = ok && r.passed;
    if (cfg.format == "json") {
      wc::Json j{{"n", r.n}, {"chambers", r.chambers}, {"verdict", r.passed ? "PASS" : "FAIL"},
                 {"seconds", r.seconds}};
      if (r.failure) j["failure"] = *r.failure;
      arr.push_back(std::move(j));
    } else {
      os << "n=" << r.n << " chambers=" << r.chambers << " " << (r.passed ? "PASS" : "FAIL")
         << " (" << r.seconds << " s)";
      if (r.failure) os << "  " << *r.failure;
      os << "\n";
    }
  }
  if (cfg.format == "json") {
    wc::Json result{{"verdict", ok ? "PASS" : "FAIL"}, {"rows", std::move(arr)}};
    os << envelope(cfg, result).dump(2) << "\n";
  } else {
    os << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kCounterexample;
}

int run_check_sign(const RunConfig& cfg, std::ostream& os) {
  wc::Variant v = wc::parse_variant(cfg.variant.empty() ? "prefer-restricted" : cfg.variant);
  if (cfg.n_values.empty()) throw wc::InvalidArgument("check-sign needs -n");
  for (int n : cfg.n_values)
    if (!cfg.allow_composite && !wc::is_prime(n))
      throw wc::InvalidArgument(std::to_string(n) + " is not prime (use --allow-composite)");
  struct Both {
    wc::ThresholdReport shape;
    wc::RimRemarkReport rim;
  };
  auto reports = wc::parallel_map(cfg.n_values, wc::resolve_jobs(cfg.jobs), [&](int n) {
    return Both{wc::check_sign_conjecture(n, v, cfg.allow_composite),
                wc::check_rim_remark(n, v, cfg.allow_composite)};
  });
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.shape.passed();
  if (cfg.format == "json") {
    wc::Json arr = wc::Json::array();
    for (const auto& r : reports) {
      wc::Json j = wc::to_json(r.shape);
      j["rim_remark"] = wc::to_json(r.rim);
      arr.push_back(std::move(j));
    }
    os << envelope(cfg, wc::Json{{"verdict", ok ? "PASS" : "FAIL"}, {"reports", arr}}).dump(2)
       << "\n";
  } else if (cfg.format == "csv") {
    bool header = true;
    for (const auto& r : reports) {
      os << wc::sign_report_csv(r.shape, header);
      header = false;
    }
  } else {
    for (const auto& r : reports) {
      os << "n=" << r.shape.n << " thresholds:";
      for (const auto& w : r.shape.thresholds) os << " " << w.str();
      os << "\n";
      for (const auto& c : r.shape.chambers)
        os << "  r=" << c.wall.str() << "  " << c.state.str() << "  ("
           << wc::exponent_string(c.state) << ")  " << (c.interior ? "interior" : "threshold")
           << "  " << (c.passed() ? "ok" : "FAIL") << "\n";
      if (r.shape.step_error) os << "  step error: " << *r.shape.step_error << "\n";
      os << "  shape law " << (r.shape.passed() ? "PASS" : "FAIL");
      if (r.shape.first_counterexample) os << ": " << *r.shape.first_counterexample;
      os << "\n  rim remark " << (r.rim.passed() ? "PASS" : "FAIL") << "\n";
    }
  }
  return ok ? kOk : kCounterexample;
}

std::vector<wc::Semantics> parse_semantics_list(const std::string& s) {
  if (s == "all") return {wc::kAllSemantics.begin(), wc::kAllSemantics.end()};
  std::vector<wc::Semantics> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(wc::parse_semantics(tok));
  if (out.empty()) throw wc::InvalidArgument("empty --semantics");
  return out;
}

int run_check_goodbox(const RunConfig& cfg, std::ostream& os) {
  auto sems = parse_semantics_list(cfg.semantics);
  wc::Variant v = wc::parse_variant(cfg.variant.empty() ? "auto" : cfg.variant);
  if (cfg.m < 2) throw wc::InvalidArgument("check-goodbox needs -m >= 2");
  std::vector<wc::Partition> lambdas = wc::enumerate_partitions(cfg.m - 1);
  auto reports = wc::parallel_map(lambdas, wc::resolve_jobs(cfg.jobs), [&](const wc::Partition& l) {
    return wc::goodbox_pair(l, sems, v);
  });
  std::size_t hard = 0;
  std::vector<std::size_t> nonfinal_fail(sems.size(), 0);
  for (const auto& r : reports) {
    hard += r.hard_ok() ? 0 : 1;
    for (std::size_t k = 0; k < sems.size(); ++k)
      if (r.hard_ok() && !r.nonfinal_good(k)) ++nonfinal_fail[k];
  }
  const wc::Semantics primary{wc::GoodSense::direct, wc::GoodBase::upcoming};
  bool ok = hard == 0;
  for (std::size_t k = 0; k < sems.size(); ++k)
    if (sems[k] == primary && nonfinal_fail[k]) ok = false;

  if (cfg.format == "json") {
    wc::Json arr = wc::Json::array();
    for (const auto& r : reports) arr.push_back(wc::to_json(r));
    wc::Json summary{{"pairs", reports.size()}, {"hard_failures", hard}};
    for (std::size_t k = 0; k < sems.size(); ++k)
      summary["nonfinal_failures"][sems[k].str()] = nonfinal_fail[k];
    summary["verdict"] = ok ? "PASS" : "FAIL";
    os << envelope(cfg, wc::Json{{"summary", summary}, {"pairs", arr}}).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      os << r.smaller.str() << " vs " << r.larger.str() << ": "
         << (r.hard_ok() ? "one-box difference everywhere" : "HARD FAILURE");
      if (r.step_error) os << " (step error: " << *r.step_error << ")";
      if (r.mismatch) os << " (" << *r.mismatch << ")";
      os << "\n";
    }
    os << reports.size() << " pairs, " << hard << " hard failures\n";
    for (std::size_t k = 0; k < sems.size(); ++k)
      os << "  " << sems[k].str() << ": " << nonfinal_fail[k]
         << " pairs with a non-final chamber where the box is not good\n";
    os << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial wall-crossing toolkit for partitions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool formats_csv = false) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(formats_csv ? CLI::IsMember({"text", "json", "csv"})
                            : CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: $WALLCROSS_JOBS or all cores)");
    sub->add_option("--out", cfg.out, "Write the report to this file");
    sub->add_option("--tie", cfg.tie, "Tie-break for equal f-values")
        ->check(CLI::IsMember({"shallow", "paper"}));
    sub->add_option("--variant", cfg.variant,
                    "Mullineux variant: regular, restricted, auto, prefer-restricted");
  };

  auto* mull = app.add_subcommand("mull", "Mullineux image of a partition");
  mull->add_option("-p,--partition", cfg.partition)->required();
  mull->add_option("-e", cfg.e)->required();
  mull->add_flag("--certify", cfg.certify, "Print both Mullineux symbols and check the symbol law");
  common(mull);

  auto* farey = app.add_subcommand("farey", "Farey walls of order n");
  farey->add_option("-n", cfg.n)->required();
  farey->add_option("--upper", cfg.upper, "Exclusive upper bound a/b (default 1)");
  common(farey);

  auto* crystal = app.add_subcommand("crystal", "Residue signature and good boxes");
  crystal->add_option("-p,--partition", cfg.partition)->required();
  crystal->add_option("-e", cfg.e)->required();
  crystal->add_option("-i", cfg.residue, "Residue (default: all)");
  common(crystal);

  auto* chamber = app.add_subcommand("chamber", "The n smallest boxes for a wall");
  chamber->add_option("-n", cfg.n)->required();
  chamber->add_option("--wall", cfg.wall)->required();
  common(chamber);

  auto* reg = app.add_subcommand("regularize", "Generalized column regularization at a wall");
  reg->add_option("-p,--partition", cfg.partition)->required();
  reg->add_option("--wall", cfg.wall)->required();
  common(reg);

  auto* orbit = app.add_subcommand("orbit", "Cross all walls starting from a partition");
  orbit->add_option("-p,--partition", cfg.partition)->required();
  orbit->add_option("--upper", cfg.upper);
  orbit->add_option("--mode", cfg.mode)->check(CLI::IsMember({"crossing", "plain"}));
  common(orbit);

  auto* orbit_all = app.add_subcommand("orbit-all", "Orbits of every partition of n");
  orbit_all->add_option("-n", cfg.n)->required();
  orbit_all->add_option("--upper", cfg.upper);
  orbit_all->add_option("--mode", cfg.mode)->check(CLI::IsMember({"crossing", "plain"}));
  common(orbit_all);

  auto* thm2 = app.add_subcommand("verify-thm2",
                                  "Orbit of (n) vs smallest-box chambers vs regularization");
  thm2->add_option("-n,--n-max", cfg.n)->required();
  common(thm2);

  auto* sign = app.add_subcommand("check-sign", "Shape law for the sign orbit (n prime)");
  sign->add_option("-n", cfg.n_values, "Prime size (repeatable)")->required();
  sign->add_flag("--allow-composite", cfg.allow_composite);
  common(sign, true);

  auto* goodbox = app.add_subcommand("check-goodbox", "First-row pairs differ by a good box");
  goodbox->add_option("-m", cfg.m, "Size of the larger diagram")->required();
  goodbox->add_option("--semantics", cfg.semantics,
                      "all, or a comma list of direct/upcoming, conjugate/upcoming, "
                      "direct/last-crossed, conjugate/last-crossed");
  common(goodbox);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  try {
    Output out(cfg.out);
    std::ostream& os = out.os();
    if (chosen == mull) return run_mull(cfg, os);
    if (chosen == farey) return run_farey(cfg, os);
    if (chosen == crystal) return run_crystal(cfg, os);
    if (chosen == chamber) return run_chamber(cfg, os);
    if (chosen == reg) return run_regularize(cfg, os);
    if (chosen == orbit) return run_orbit(cfg, os);
    if (chosen == orbit_all) return run_orbit_all(cfg, os);
    if (chosen == thm2) return run_verify_thm2(cfg, os);
    if (chosen == sign) return run_check_sign(cfg, os);
    if (chosen == goodbox) return run_check_goodbox(cfg, os);
  } catch (const wc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const wc::NotAYoungDiagram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCounterexample;
  } catch (const wc::StepError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCounterexample;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
