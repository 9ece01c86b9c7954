#pragma once

#include <cstdint>
#include <vector>

#include "chainorder/inverse_limit.hpp"
#include "chainorder/periodic_set.hpp"
#include "chainorder/ultrafilter.hpp"
#include "chainorder/verdict.hpp"

namespace chainorder {

/// Threads x, y of the tent inverse limit with x_0 = y_0 = 1/2 and
/// x_i > y_i exactly when i is in A (i >= 1).
struct WitnessPair {
  EventuallyPeriodicSet a;
  std::uint64_t depth;
  ThreadPoint x;
  ThreadPoint y;
  /// A is finite or cofinite, so every ultrafilter orders the pair alike.
  bool degenerate;
};

/// x_0..x_depth and y_0..y_depth by the level-by-level induction: at level i
/// the point with the smaller previous coordinate takes the outer preimage
/// when that makes the required sign, the inner one otherwise; the other
/// point always takes its smaller preimage.
std::pair<std::vector<Rational>, std::vector<Rational>> witness_coordinates(
    const EventuallyPeriodicSet& a, std::uint64_t depth);

/// The pair as eventually periodic threads (defined at every depth); their
/// first `depth` coordinates are checked against witness_coordinates.
/// Throws std::invalid_argument when depth < 1.
WitnessPair build_witness(const EventuallyPeriodicSet& a, std::uint64_t depth);

/// le = comp(A) + {0}, ge = A + {0}.
OrderCertificate witness_certificate(const EventuallyPeriodicSet& a);

struct WitnessCheck {
  bool consistent = true;  // f(x_i) = x_{i-1}, f(y_i) = y_{i-1}
  bool dyadic = true;      // denominators divide 2^(i+1)
  bool pattern = true;     // x_i > y_i iff i in A, 1 <= i <= depth
  std::vector<std::uint64_t> gt_levels;
};

WitnessCheck check_witness(const WitnessPair& w);

struct DistinctOrders {
  WitnessPair pair;
  WitnessCheck check;
  std::vector<Relation> trace;  // levels 0..depth
  ComparisonVerdict under_u1;
  ComparisonVerdict under_u2;
  bool opposite = false;
};

/// Throws std::invalid_argument unless u1 contains A and u2 does not.
DistinctOrders demonstrate_distinct_orders(const EventuallyPeriodicSet& a, std::uint64_t depth,
                                           const SimulatedUltrafilter& u1,
                                           const SimulatedUltrafilter& u2);

struct BruteForceResult {
  std::uint64_t realizing_pairs = 0;
  bool constructed_found = false;
};

/// Enumerates every pair of branch words of length depth from 1/2 and counts
/// those with x_i > y_i iff i in A on 1..depth. Depth is limited to 10.
BruteForceResult brute_force_oracle(const EventuallyPeriodicSet& a, std::uint64_t depth);

}  // namespace chainorder
