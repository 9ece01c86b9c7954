#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainorder/experiments.hpp"
#include "chainorder/report.hpp"

using namespace chainorder;

namespace {

const auto kU = SimulatedUltrafilter::parse("r2=0");

Report sample() {
  return compare_experiment(SpaceId::Arc, "standard", CatalogPoint::arc(Rational(1, 4)),
                            CatalogPoint::arc(Rational(3, 4)), 8, kU);
}

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  CHECK(to_json(Rational(2)) == "2/1");
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  const auto evens = EventuallyPeriodicSet::evens();
  const Json js = to_json(evens);
  CHECK(js["pattern"] == Json::array({1, 0}));
  CHECK(js["prefix"] == Json::array());
  CHECK(js["period"] == 2);
  CHECK(set_from_json(js) == evens);
  CHECK(to_json(IndexRange(2, 3)) == Json::array({2, 3}));
  const Json tw = to_json(kU);
  CHECK(tw["moduli"] == Json::array({1, 2}));
  CHECK(tw["residues"] == Json::array({0, 0}));
}

TEST_CASE("report fields in fixed order") {
  const Json j = to_json(sample());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "experiment", "inputs", "traces",
                                         "verdicts", "assertions", "passed"});
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["passed"] == true);
}

TEST_CASE("round trip and determinism") {
  const Report r = sample();
  const std::string a = emit_report(r, ReportFormat::Json);
  CHECK(a == emit_report(sample(), ReportFormat::Json));
  CHECK(a.back() == '\n');
  const Report back = report_from_json(Json::parse(a));
  CHECK(emit_report(back, ReportFormat::Json) == a);
  CHECK(back.passed() == r.passed());

  Report timed = r;
  timed.wall_clock_seconds = 0.25;
  const Json tj = to_json(timed);
  CHECK(tj["wall_clock_seconds"] == 0.25);
  CHECK(report_from_json(tj).wall_clock_seconds == 0.25);

  Json bad = to_json(r);
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
}

TEST_CASE("empty traces and failed assertions") {
  Report r;
  r.experiment = "empty";
  r.traces.push_back(Json::array());
  CHECK(r.passed());
  r.check("always", false, "forced");
  CHECK_FALSE(r.passed());
  const Json j = to_json(r);
  CHECK(j["traces"] == Json::array({Json::array()}));
  CHECK(j["passed"] == false);
  const std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("(empty)") != std::string::npos);
  CHECK(text.find("FAIL always: forced") != std::string::npos);
  CHECK(text.find("FAILED") != std::string::npos);
}

TEST_CASE("text format") {
  const std::string text = emit_report(sample(), ReportFormat::Text);
  CHECK(text.rfind("experiment: compare", 0) == 0);
  CHECK(text.find("PASS verdict decided") != std::string::npos);
  CHECK(text.substr(text.size() - 7) == "passed\n");
  CHECK(parse_format("text") == ReportFormat::Text);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("set and thread specs") {
  CHECK(parse_set_spec("even") == EventuallyPeriodicSet::evens());
  CHECK(parse_set_spec("odd") == EventuallyPeriodicSet::odds());
  CHECK(parse_set_spec("cofinite:3") == EventuallyPeriodicSet::cofinite_from(3));
  CHECK(parse_set_spec("finite:1,4") == EventuallyPeriodicSet::finite({1, 4}));
  CHECK(parse_set_spec("/10") == EventuallyPeriodicSet::evens());
  CHECK_THROWS_AS(parse_set_spec("primes"), std::invalid_argument);

  const auto z = parse_thread_spec("0;zero");
  CHECK(z.tail_kind() == TailKind::Zero);
  CHECK(z.coordinate(5) == Rational(0));
  const auto p = parse_thread_spec("1/2;periodic:/1");
  CHECK(p.coordinate(1) == Rational(3, 4));
  const auto wd = parse_thread_spec("1/2;word:LR");
  CHECK(wd.max_depth() == 2u);
  CHECK_THROWS(parse_thread_spec("1/2;spiral:1"));
}
