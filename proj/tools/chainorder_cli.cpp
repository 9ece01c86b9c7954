#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "chainorder/acceptance.hpp"
#include "chainorder/experiments.hpp"

using namespace chainorder;

namespace {

struct Output {
  std::string format = "json";
  std::string out;
  bool timing = false;
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this file");
  cmd->add_flag("--timing", o.timing, "record wall-clock time in the report");
}

// Writes the report to --out, or to $CHAINORDER_REPORT_DIR/<experiment>.<ext>,
// or to stdout.
int emit(Report r, const Output& o, double seconds) {
  if (o.timing) r.wall_clock_seconds = seconds;
  const auto fmt = parse_format(o.format);
  const std::string text = emit_report(r, fmt);
  std::string path = o.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("CHAINORDER_REPORT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (r.experiment + (fmt == ReportFormat::Json ? ".json" : ".txt")))
                 .string();
    }
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ultrafilter orders on chainable continua"};
  app.require_subcommand(1);
  Output out;

  auto* catalog = app.add_subcommand("catalog", "catalog spaces");
  catalog->require_subcommand(1);
  auto* catalog_list_cmd = catalog->add_subcommand("list", "list spaces, families and witnesses");
  add_output_options(catalog_list_cmd, out);

  std::string space = "arc", variant = "standard", x, y, tower = "r2=0";
  std::uint64_t depth = 20;
  auto* compare = app.add_subcommand("compare", "compare two points along a chain family");
  compare->add_option("--space", space, "arc, s1, s2, s3, t or knaster");
  compare->add_option("--variant", variant, "chain family");
  compare->add_option("--x", x, "first point (catalog point or thread spec)")->required();
  compare->add_option("--y", y, "second point")->required();
  compare->add_option("--depth", depth, "levels to trace")->check(CLI::Range(1, 4096));
  compare->add_option("--tower", tower, "residue tower, e.g. r2=0 or pow2:6:5");
  add_output_options(compare, out);

  auto* count = app.add_subcommand("orders-count", "count distinct orders on the witness points");
  count->add_option("--space", space, "arc, s1, s2, s3 or t")->required();
  count->add_option("--depth", depth, "levels to trace")->check(CLI::Range(1, 4096));
  add_output_options(count, out);

  std::string set_spec, u1 = "r2=0", u2 = "r2=1";
  auto* knaster = app.add_subcommand("knaster-witness", "build the Knaster witness pair");
  knaster->add_option("--set", set_spec, "even, odd, cofinite:N, finite:1,2 or prefix/pattern")
      ->required();
  knaster->add_option("--depth", depth, "levels")->check(CLI::Range(1, 4096));
  knaster->add_option("--u1", u1, "tower containing the set");
  knaster->add_option("--u2", u2, "tower not containing the set");
  add_output_options(knaster, out);

  auto* orient = app.add_subcommand("orientation", "tail-flip combinatorics");
  orient->require_subcommand(1);
  std::uint64_t n = 0, word_depth = 10;
  std::string prefix, from, to, parity = "even";
  auto* decompose = orient->add_subcommand("decompose", "odd decomposition of s_n on B_s");
  decompose->add_option("--n", n, "flip index")->required();
  decompose->add_option("--prefix", prefix, "binary word of length n");
  decompose->add_option("--depth", word_depth, "word length for the exhaustive check")
      ->check(CLI::Range(1, 20));
  add_output_options(decompose, out);
  auto* reach = orient->add_subcommand("reach", "parity-constrained reachability");
  reach->add_option("--from", from, "source prefix");
  reach->add_option("--to", to, "target prefix");
  reach->add_option("--parity", parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  reach->add_option("--depth", word_depth, "word length for the exhaustive check")
      ->check(CLI::Range(1, 20));
  add_output_options(reach, out);

  std::uint64_t seed = kDefaultSeed;
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--seed", seed, "seed for the randomized criteria");
  add_output_options(suite, out);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if (catalog_list_cmd->parsed()) return emit(catalog_report(), out, elapsed());
    if (compare->parsed()) {
      const auto u = SimulatedUltrafilter::parse(tower);
      if (space == "knaster")
        return emit(compare_threads_experiment(parse_thread_spec(x), parse_thread_spec(y), depth, u),
                    out, elapsed());
      // bare parameters name arc points
      const auto point = [&](const std::string& t) {
        return CatalogPoint::parse(space == "arc" && t.find(':') == std::string::npos ? "arc:" + t : t);
      };
      return emit(compare_experiment(parse_space(space), variant, point(x), point(y), depth, u),
                  out, elapsed());
    }
    if (count->parsed()) return emit(orders_count_experiment(parse_space(space), depth), out, elapsed());
    if (knaster->parsed())
      return emit(knaster_experiment(parse_set_spec(set_spec), depth, SimulatedUltrafilter::parse(u1),
                                     SimulatedUltrafilter::parse(u2)),
                  out, elapsed());
    if (decompose->parsed())
      return emit(decompose_experiment(n, parse_word(prefix), word_depth), out, elapsed());
    if (reach->parsed())
      return emit(reach_experiment(parse_word(from), parse_word(to), parse_parity(parity), word_depth),
                  out, elapsed());
    if (suite->parsed()) {
      Report r;
      r.experiment = "suite";
      r.inputs = Json{{"seed", seed}};
      for (const auto& c : run_acceptance(seed)) {
        r.check(std::to_string(c.id) + " " + c.title, c.passed, c.detail);
        if (out.timing) r.traces.push_back(Json{{"criterion", c.id}, {"seconds", c.seconds}});
      }
      return emit(r, out, elapsed());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
