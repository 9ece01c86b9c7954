#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chainorder/periodic_set.hpp"
#include "chainorder/ultrafilter.hpp"

namespace chainorder {

/// Strict comparison of two points at one level.
enum class Relation { LT, EQ, GT };

enum class VerdictKind { Stabilized, UltrafilterDependent, Unknown };

std::string to_string(Relation r);
std::string to_string(VerdictKind k);
Relation flip(Relation r);

/// Index sets describing a comparison: le = {n : x <=_n y}, ge = {n : y <=_n x}.
/// `threshold` is the level from which the certifying argument applies.
struct OrderCertificate {
  EventuallyPeriodicSet le;
  EventuallyPeriodicSet ge;
  std::optional<std::uint64_t> threshold;
  std::string basis;
};

struct ComparisonVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// Set unless kind == Unknown.
  std::optional<Relation> relation;
  /// Stabilized only: levels >= threshold all have direction `relation`.
  std::optional<std::uint64_t> threshold;
  std::optional<EventuallyPeriodicSet> le_set;
  std::optional<EventuallyPeriodicSet> ge_set;
  std::uint64_t depth = 0;
  bool tower_extended = false;
  std::string basis;

  bool decided() const { return relation.has_value(); }
};

/// Stabilized when both index sets are finite or cofinite, otherwise decided
/// by the ultrafilter. The sets must cover N (every level compares).
ComparisonVerdict verdict_from_certificate(const OrderCertificate& cert,
                                           const SimulatedUltrafilter& u, std::uint64_t depth);

ComparisonVerdict unknown_verdict(std::uint64_t depth, std::string basis);

}  // namespace chainorder
