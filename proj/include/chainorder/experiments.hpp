#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainorder/catalog.hpp"
#include "chainorder/chains.hpp"
#include "chainorder/inverse_limit.hpp"
#include "chainorder/orientation.hpp"
#include "chainorder/report.hpp"
#include "chainorder/ultrafilter.hpp"

namespace chainorder {

/// "even", "odd", "empty", "all", "cofinite:N", "finite:1,4,9" or the
/// "prefix/pattern" bit notation.
EventuallyPeriodicSet parse_set_spec(const std::string& text);

/// Tent-system thread "stem;tail": stem is a comma-separated list of
/// rationals x_0,..,x_N; tail is empty, "zero", "word:LRRL" or
/// "periodic:prefix/pattern" over L/R written as 0/1.
ThreadPoint parse_thread_spec(const std::string& text);

/// Pairwise verdicts of a family on a point list.
struct PointOrder {
  std::vector<std::vector<ComparisonVerdict>> verdicts;
  bool all_decided = true;
  /// Set when every verdict is decided and they form a total order.
  std::optional<FiniteOrder> order;
};

PointOrder order_on(const ChainSequence<CatalogPoint>& seq, const std::vector<CatalogPoint>& pts,
                    const SimulatedUltrafilter& u, std::uint64_t depth);

/// Strict per-level direction, or nullopt when the level relation is Both.
std::optional<Relation> strict_direction(LevelRelation r);

/// Variants counted by orders-count; S3 uses every binary word of length 6.
std::vector<std::string> counted_variants(SpaceId space);

Report catalog_report();
Report compare_experiment(SpaceId space, const std::string& variant, const CatalogPoint& x,
                          const CatalogPoint& y, std::uint64_t depth,
                          const SimulatedUltrafilter& u);
/// Inverse-limit comparison of two tent threads, with the pullback-chain trace.
Report compare_threads_experiment(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth,
                                  const SimulatedUltrafilter& u);
Report orders_count_experiment(SpaceId space, std::uint64_t depth);
Report knaster_experiment(const EventuallyPeriodicSet& a, std::uint64_t depth,
                          const SimulatedUltrafilter& u1, const SimulatedUltrafilter& u2);
Report decompose_experiment(std::uint64_t n, const BinaryWord& s, std::uint64_t depth);
Report reach_experiment(const BinaryWord& s, const BinaryWord& target, Parity parity,
                        std::uint64_t depth);

}  // namespace chainorder
