#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainorder/chains.hpp"
#include "chainorder/inverse_limit.hpp"
#include "chainorder/periodic_set.hpp"
#include "chainorder/rational.hpp"
#include "chainorder/ultrafilter.hpp"
#include "chainorder/verdict.hpp"

namespace chainorder {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of one experiment. Field order in the JSON form is fixed.
struct Report {
  std::string experiment;
  Json inputs = Json::object();
  Json traces = Json::array();
  Json verdicts = Json::array();
  std::vector<Assertion> assertions;
  std::optional<double> wall_clock_seconds;

  void check(std::string name, bool ok, std::string detail = {});
  bool passed() const;
};

enum class ReportFormat { Json, Text };
ReportFormat parse_format(const std::string& text);

Json to_json(const Rational& r);
Json to_json(const EventuallyPeriodicSet& s);
Json to_json(const SimulatedUltrafilter& u);
Json to_json(const IndexRange& r);
Json to_json(const LevelRecord& r);
Json to_json(const ComparisonVerdict& v);
/// Stem, tail kind and the tail data.
Json to_json(const ThreadPoint& t);
Json to_json(const Report& r);

Rational rational_from_json(const Json& j);
EventuallyPeriodicSet set_from_json(const Json& j);
Report report_from_json(const Json& j);

/// JSON (two-space indent, trailing newline) or a plain-text table.
std::string emit_report(const Report& r, ReportFormat format);

}  // namespace chainorder
