#include "chainorder/report.hpp"

#include <sstream>
#include <stdexcept>

namespace chainorder {

void Report::check(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "text") return ReportFormat::Text;
  throw std::invalid_argument("format must be json or text, got '" + text + "'");
}

Json to_json(const Rational& r) { return r.str(); }

namespace {

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

Json bit_array(const std::vector<bool>& bits) {
  Json a = Json::array();
  for (bool b : bits) a.push_back(b ? 1 : 0);
  return a;
}

std::vector<bool> bits_from(const Json& a) {
  std::vector<bool> out;
  for (const auto& b : a) {
    const int v = b.get<int>();
    if (v != 0 && v != 1) throw std::invalid_argument("bit array entries must be 0 or 1");
    out.push_back(v == 1);
  }
  return out;
}

std::string tail_name(TailKind k) {
  switch (k) {
    case TailKind::None: return "none";
    case TailKind::Zero: return "zero";
    case TailKind::Word: return "word";
    case TailKind::Periodic: return "periodic";
  }
  return "none";
}

}  // namespace

Json to_json(const EventuallyPeriodicSet& s) {
  return Json{{"prefix", bit_array(s.prefix())}, {"period", s.period()},
              {"pattern", bit_array(s.pattern())}};
}

Json to_json(const SimulatedUltrafilter& u) {
  return Json{{"moduli", u.moduli()}, {"residues", u.residues()}};
}

Json to_json(const IndexRange& r) { return Json::array({r.lo, r.hi}); }

Json to_json(const LevelRecord& r) {
  return Json{{"level", r.level},         {"k", r.k},
              {"mesh", to_json(r.mesh)},  {"idx_x", to_json(r.idx_x)},
              {"idx_y", to_json(r.idx_y)}, {"relation", to_string(r.relation)}};
}

Json to_json(const ComparisonVerdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  j["relation"] = v.relation ? Json(to_string(*v.relation)) : Json(nullptr);
  j["threshold"] = v.threshold ? Json(*v.threshold) : Json(nullptr);
  j["le_set"] = v.le_set ? to_json(*v.le_set) : Json(nullptr);
  j["ge_set"] = v.ge_set ? to_json(*v.ge_set) : Json(nullptr);
  j["depth"] = v.depth;
  j["tower_extended"] = v.tower_extended;
  j["basis"] = v.basis;
  return j;
}

Json to_json(const ThreadPoint& t) {
  Json stem = Json::array();
  for (const auto& c : t.stem()) stem.push_back(to_json(c));
  Json tail{{"kind", tail_name(t.tail_kind())}};
  if (t.tail_kind() == TailKind::Word) tail["word"] = bit_string(t.word());
  if (t.tail_kind() == TailKind::Periodic) tail["word"] = to_json(*t.periodic_word());
  return Json{{"stem", stem}, {"tail", tail}};
}

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["experiment"] = r.experiment;
  j["inputs"] = r.inputs;
  j["traces"] = r.traces;
  j["verdicts"] = r.verdicts;
  Json as = Json::array();
  for (const auto& a : r.assertions)
    as.push_back(Json{{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = as;
  j["passed"] = r.passed();
  if (r.wall_clock_seconds) j["wall_clock_seconds"] = *r.wall_clock_seconds;
  return j;
}

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

EventuallyPeriodicSet set_from_json(const Json& j) {
  return EventuallyPeriodicSet(bits_from(j.at("prefix")), bits_from(j.at("pattern")));
}

Report report_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version");
  Report r;
  r.experiment = j.at("experiment").get<std::string>();
  r.inputs = j.at("inputs");
  r.traces = j.at("traces");
  r.verdicts = j.at("verdicts");
  for (const auto& a : j.at("assertions"))
    r.assertions.push_back({a.at("name").get<std::string>(), a.at("passed").get<bool>(),
                            a.at("detail").get<std::string>()});
  if (j.contains("wall_clock_seconds")) r.wall_clock_seconds = j["wall_clock_seconds"].get<double>();
  return r;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "experiment: " << r.experiment << "\n";
  for (const auto& [k, v] : r.inputs.items()) os << "  " << k << " = " << scalar(v) << "\n";
  std::size_t t = 0;
  for (const auto& trace : r.traces) {
    os << "trace " << t++;
    if (trace.contains("label")) os << " (" << scalar(trace["label"]) << ")";
    os << "\n";
    const Json& rows = trace.contains("levels") ? trace["levels"] : trace;
    if (!rows.is_array() || rows.empty()) {
      os << "  (empty)\n";
      continue;
    }
    bool header = false;
    for (const auto& row : rows) {
      if (!row.is_object()) {
        os << "  " << scalar(row) << "\n";
        continue;
      }
      if (!header) {
        os << " ";
        for (const auto& [k, v] : row.items()) os << " " << k;
        os << "\n";
        header = true;
      }
      os << " ";
      for (const auto& [k, v] : row.items()) os << " " << scalar(v);
      os << "\n";
    }
  }
  for (const auto& v : r.verdicts) {
    os << "verdict:";
    for (const auto& [k, val] : v.items())
      if (!val.is_null() && !val.is_object()) os << " " << k << "=" << scalar(val);
    os << "\n";
  }
  for (const auto& a : r.assertions) {
    os << (a.passed ? "PASS " : "FAIL ") << a.name;
    if (!a.detail.empty()) os << ": " << a.detail;
    os << "\n";
  }
  if (r.wall_clock_seconds) os << "wall clock: " << *r.wall_clock_seconds << " s\n";
  os << (r.passed() ? "passed" : "FAILED") << "\n";
  return os.str();
}

}  // namespace chainorder
