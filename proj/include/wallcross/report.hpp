#ifndef WALLCROSS_REPORT_HPP_
#define WALLCROSS_REPORT_HPP_

// JSON and CSV renderings of traces and harness reports. Key order is fixed
// (ordered_json) so output is byte-stable.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallcross/conjectures.hpp"
#include "wallcross/crystal.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/wallcross.hpp"

namespace wallcross {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Box& b) { return Json::array({b.row, b.col}); }

inline Json to_json(const StepRecord& s) {
  Json j;
  j["wall"] = s.wall.str();
  j["base"] = s.base;
  j["variant"] = to_string(s.variant);
  j["image"] = to_json(s.image);
  j["post"] = to_json(s.post);
  if (s.restricted_alternative) j["restricted_image"] = to_json(*s.restricted_alternative);
  return j;
}

inline Json to_json(const OrbitTrace& t) {
  Json j;
  j["start"] = to_json(t.start);
  j["mode"] = to_string(t.mode);
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

inline Json to_json(const SignatureWord& w) {
  Json j;
  j["base"] = w.base;
  j["residue"] = w.residue;
  j["word"] = w.str();
  Json boxes = Json::array();
  for (const auto& en : w.entries) boxes.push_back(to_json(en.box));
  j["boxes"] = std::move(boxes);
  return j;
}

inline Json to_json(const MullineuxSymbol& s) {
  Json j;
  j["base"] = s.base;
  j["a"] = s.a;
  j["r"] = s.r;
  return j;
}

inline Json to_json(const TwoBlockShape& s) {
  return Json{{"x", s.x}, {"y", s.y}, {"z", s.z}, {"t", s.t}};
}

inline Json to_json(const ThresholdReport& r) {
  Json j;
  j["n"] = r.n;
  j["variant"] = to_string(r.variant);
  j["verdict"] = r.passed() ? "PASS" : "FAIL";
  Json th = Json::array();
  for (const auto& w : r.thresholds) th.push_back(w.str());
  j["thresholds"] = std::move(th);
  Json rows = Json::array();
  for (const auto& c : r.chambers) {
    Json row;
    row["wall"] = c.wall.str();
    row["lower"] = c.lower.str();
    row["upper"] = c.upper.str();
    row["state"] = to_json(c.state);
    row["variant"] = to_string(c.variant);
    row["interior"] = c.interior;
    row["fit"] = to_string(c.fit.kind);
    Json readings = Json::array();
    for (const auto& v : c.readings) {
      Json rv = to_json(v.shape);
      rv["a"] = v.a;
      rv["b"] = v.b;
      rv["size"] = v.size;
      rv["diophantine"] = v.diophantine;
      readings.push_back(std::move(rv));
    }
    row["readings"] = std::move(readings);
    row["at_most_two_sizes"] = c.at_most_two_sizes;
    row["pass"] = c.passed();
    rows.push_back(std::move(row));
  }
  j["chambers"] = std::move(rows);
  if (r.step_error) j["step_error"] = *r.step_error;
  if (r.first_counterexample) j["counterexample"] = *r.first_counterexample;
  return j;
}

inline std::string sign_report_csv(const ThresholdReport& r, bool header = true) {
  std::ostringstream os;
  if (header) os << "n,wall,lower,upper,state,x,y,z,t,interior,two_sizes,a,b,size,diophantine,pass\n";
  for (const auto& c : r.chambers) {
    // first reading that passes, else the first reading, else blanks
    const EquationVerdict* v = nullptr;
    for (const auto& rv : c.readings)
      if (!v || (rv.passed() && !v->passed())) v = &rv;
    os << r.n << ',' << c.wall.str() << ',' << c.lower.str() << ',' << c.upper.str() << ",\""
       << c.state.str() << "\",";
    if (v)
      os << v->shape.x << ',' << v->shape.y << ',' << v->shape.z << ',' << v->shape.t << ','
         << c.interior << ',' << c.at_most_two_sizes << ',' << v->a << ',' << v->b << ','
         << v->size << ',' << v->diophantine;
    else
      os << ",,,," << c.interior << ',' << c.at_most_two_sizes << ",,,,";
    os << ',' << (c.passed() ? "PASS" : "FAIL") << '\n';
  }
  if (r.step_error)
    os << r.n << ",,,,,,,,,,,,,,,\"step error: " << *r.step_error << "\"\n";
  return os.str();
}

inline Json to_json(const RimRemarkReport& r) {
  Json j;
  j["n"] = r.n;
  j["verdict"] = r.passed() ? "PASS" : "FAIL";
  Json rows = Json::array();
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  for (const auto& row : r.rows) {
    Json x;
    x["wall"] = row.wall.str();
    x["state"] = to_json(row.state);
    x["lower"] = row.lower.str();
    x["upper"] = row.upper.str();
    x["interior"] = row.interior;
    x["upper_rim"] = opt(row.upper_rim);
    x["lower_rim_transposed"] = opt(row.lower_rim_transposed);
    x["remainder_two_sizes"] = opt(row.remainder_two_sizes);
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  if (r.step_error) j["step_error"] = *r.step_error;
  return j;
}

inline Json to_json(const GoodBoxDiffReport& r) {
  Json j;
  j["smaller"] = to_json(r.smaller);
  j["larger"] = to_json(r.larger);
  j["hard_ok"] = r.hard_ok();
  Json chambers = Json::array();
  for (const auto& ch : r.chambers) {
    Json c;
    c["lower"] = ch.lower ? Json(ch.lower->str()) : Json("0");
    c["upper"] = ch.upper ? Json(ch.upper->str()) : Json("1");
    c["smaller"] = to_json(ch.smaller);
    c["larger"] = to_json(ch.larger);
    c["diff"] = ch.diff ? to_json(*ch.diff) : Json(nullptr);
    Json good;
    for (std::size_t k = 0; k < r.semantics.size(); ++k)
      good[r.semantics[k].str()] = ch.good[k] ? Json(*ch.good[k]) : Json(nullptr);
    c["good"] = std::move(good);
    chambers.push_back(std::move(c));
  }
  j["chambers"] = std::move(chambers);
  if (r.step_error) j["step_error"] = *r.step_error;
  if (r.mismatch) j["mismatch"] = *r.mismatch;
  return j;
}

}  // namespace wallcross

#endif  // WALLCROSS_REPORT_HPP_
