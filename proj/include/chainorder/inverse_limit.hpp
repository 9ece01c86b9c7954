#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chainorder/periodic_set.hpp"
#include "chainorder/pl_map.hpp"
#include "chainorder/rational.hpp"
#include "chainorder/ultrafilter.hpp"
#include "chainorder/verdict.hpp"

namespace chainorder {

/// Inverse system ([0,1], f_i) with f_i = maps[i mod maps.size()].
/// Threads satisfy x_i = f_i(x_{i+1}).
class InverseSystem {
 public:
  explicit InverseSystem(std::vector<PLMap> maps);
  static std::shared_ptr<const InverseSystem> tent();

  const PLMap& map(std::uint64_t i) const { return maps_[i % maps_.size()]; }
  std::size_t cycle_length() const { return maps_.size(); }
  bool is_tent() const;

 private:
  std::vector<PLMap> maps_;
};

class DepthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Branch choice (bit false = Left = smallest preimage, true = Right = largest).
enum class TailKind { None, Zero, Word, Periodic };

/// A point of the inverse limit given by explicit coordinates x_0..x_N
/// followed by a rule producing x_{N+1}, x_{N+2}, ...
class ThreadPoint {
 public:
  /// Stem-only point; coordinates beyond the stem raise DepthError.
  static ThreadPoint from_stem(std::shared_ptr<const InverseSystem> sys, std::vector<Rational> stem);
  /// Stem continued by zeros; needs the last stem coordinate to be 0 and 0 to
  /// be fixed by the bonding maps.
  static ThreadPoint zero_tail(std::shared_ptr<const InverseSystem> sys, std::vector<Rational> stem);
  static ThreadPoint zero(std::shared_ptr<const InverseSystem> sys);
  /// Stem continued by a finite branch word.
  static ThreadPoint word_tail(std::shared_ptr<const InverseSystem> sys, std::vector<Rational> stem,
                               std::vector<bool> word);
  /// Stem continued by an eventually periodic branch word; bit j chooses
  /// coordinate N+1+j.
  static ThreadPoint periodic_tail(std::shared_ptr<const InverseSystem> sys,
                                   std::vector<Rational> stem, EventuallyPeriodicSet word);

  /// Throws DepthError when n is past the representable depth.
  Rational coordinate(std::uint64_t n) const;
  /// x_0..x_depth.
  std::vector<Rational> coordinates(std::uint64_t depth) const;
  /// Largest computable index, or nullopt when unbounded.
  std::optional<std::uint64_t> max_depth() const;

  const std::vector<Rational>& stem() const { return stem_; }
  TailKind tail_kind() const { return kind_; }
  const std::vector<bool>& word() const { return word_; }
  const std::optional<EventuallyPeriodicSet>& periodic_word() const { return periodic_; }
  const InverseSystem& system() const { return *sys_; }
  std::shared_ptr<const InverseSystem> system_ptr() const { return sys_; }

  /// Branch bit used to produce coordinate n (n > stem end); Zero tails report Left.
  bool branch_bit(std::uint64_t n) const;

 private:
  ThreadPoint(std::shared_ptr<const InverseSystem> sys, std::vector<Rational> stem, TailKind kind);
  void check_stem() const;

  std::shared_ptr<const InverseSystem> sys_;
  std::vector<Rational> stem_;
  TailKind kind_;
  std::vector<bool> word_;
  std::optional<EventuallyPeriodicSet> periodic_;
};

/// Exact comparison of the n-th coordinates.
Relation compare_level(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t n);

/// Per-level outcomes for levels 0..depth.
std::vector<Relation> level_trace(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth);

/// Exact LE/GE index sets when they can be derived from the representations:
/// both tails zero, or the tent system with both tails zero or eventually
/// periodic. Otherwise nullopt.
std::optional<OrderCertificate> exact_order_sets(const ThreadPoint& x, const ThreadPoint& y);

/// Inverse-limit ultrafilter order. Uses exact_order_sets when available,
/// otherwise the supplied certificate after checking it against the level
/// trace to `depth`; Unknown when neither applies. Throws DepthError when
/// coordinates are not computable to `depth`.
ComparisonVerdict inverse_limit_order(const ThreadPoint& x, const ThreadPoint& y,
                                      const SimulatedUltrafilter& u, std::uint64_t depth,
                                      const std::optional<OrderCertificate>& certificate = {});

/// Upper bound on the diameter of p_n^{-1}(t) under d(x,y) = sum 2^-i |x_i - y_i|.
Rational fiber_diameter_bound(const InverseSystem& sys, std::uint64_t n);

/// d(x,y) summed over coordinates 0..depth; the omitted tail is at most 2^-depth.
Rational truncated_distance(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth);

/// delta > 0 such that |x_n - y_n| < delta implies d(x,y) < eps.
/// Throws std::invalid_argument when eps <= fiber_diameter_bound(sys, n).
Rational epsilon_map_modulus(const InverseSystem& sys, std::uint64_t n, const Rational& eps);

/// C_n = sum_{i<=n} 2^-i prod_{i<=j<n} Lip(f_j): d(x,y) <= C_n |x_n - y_n| + 2^-n.
Rational lipschitz_weight(const InverseSystem& sys, std::uint64_t n);

}  // namespace chainorder
