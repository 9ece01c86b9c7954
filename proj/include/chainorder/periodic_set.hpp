#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chainorder {

/// Links a point occupies in one chain: a single link, or two adjacent ones.
/// Link indices are 1-based.
struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;

  /// Throws std::invalid_argument unless 1 <= lo <= hi <= lo + 1.
  IndexRange(std::int64_t lo, std::int64_t hi);

  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// A subset of N = {0, 1, 2, ...} given by a finite prefix followed by a
/// repeating pattern. Values are kept normalized (shortest period, then
/// shortest prefix), so structural equality is set equality.
class EventuallyPeriodicSet {
 public:
  /// Membership of n: prefix[n] for n < prefix.size(), otherwise
  /// pattern[(n - prefix.size()) % pattern.size()]. Pattern must be nonempty.
  EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> pattern);

  static EventuallyPeriodicSet empty();
  static EventuallyPeriodicSet all();
  /// {n : n >= start}.
  static EventuallyPeriodicSet cofinite_from(std::uint64_t start);
  /// {n : n mod modulus == residue}.
  static EventuallyPeriodicSet residue_class(std::uint64_t modulus, std::uint64_t residue);
  static EventuallyPeriodicSet evens() { return residue_class(2, 0); }
  static EventuallyPeriodicSet odds() { return residue_class(2, 1); }
  /// The finite set containing exactly the listed members.
  static EventuallyPeriodicSet finite(const std::vector<std::uint64_t>& members);

  bool contains(std::uint64_t n) const;

  EventuallyPeriodicSet complement() const;
  EventuallyPeriodicSet unite(const EventuallyPeriodicSet& other) const;
  EventuallyPeriodicSet intersect(const EventuallyPeriodicSet& other) const;
  bool is_subset_of(const EventuallyPeriodicSet& other) const;
  /// {n : n + k in S}.
  EventuallyPeriodicSet shifted_down(std::uint64_t k) const;
  /// Copy with membership of n forced to `member`.
  EventuallyPeriodicSet with(std::uint64_t n, bool member) const;

  bool is_finite() const;
  bool is_cofinite() const;
  /// Smallest t such that membership is constant on [t, inf); nullopt when
  /// the tail is not constant.
  std::optional<std::uint64_t> stable_from() const;

  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& pattern() const { return pattern_; }
  std::uint64_t period() const { return pattern_.size(); }

  /// Compact "prefix/pattern" bit notation, e.g. "/10" for the evens.
  std::string bits() const;
  /// Parses the notation produced by bits(); a missing '/' means a finite
  /// prefix followed by zeros.
  static EventuallyPeriodicSet parse_bits(const std::string& text);

  friend bool operator==(const EventuallyPeriodicSet&, const EventuallyPeriodicSet&) = default;

 private:
  void normalize();

  std::vector<bool> prefix_;
  std::vector<bool> pattern_;
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace chainorder
