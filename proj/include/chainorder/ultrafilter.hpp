#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chainorder/periodic_set.hpp"

namespace chainorder {

/// Stand-in for a non-principal ultrafilter on N: a chain of moduli
/// 1 = m_0 | m_1 | ... | m_K with compatible residues r_i. A set S is "in"
/// the filter when the progression r_K + m_K * N eventually lies in S.
class SimulatedUltrafilter {
 public:
  struct Decision {
    bool member;
    /// True when the tower had to be lengthened to reach S's period.
    bool extended;
    /// Modulus used for the decision (last modulus of the extended tower).
    std::uint64_t modulus;
  };

  /// Throws std::invalid_argument unless moduli form a divisor chain
  /// starting at 1 with compatible residues.
  SimulatedUltrafilter(std::vector<std::uint64_t> moduli, std::vector<std::uint64_t> residues);

  /// Moduli 1,2,4,...,2^k; residue r_{2^j} is the low j bits of `residue`.
  static SimulatedUltrafilter powers_of_two(unsigned k, std::uint64_t residue);
  /// Moduli 1!,2!,...,k!; residue at j! is `residue` mod j!.
  static SimulatedUltrafilter factorial(unsigned k, std::uint64_t residue);
  /// "r2=0", "r2=1,r4=3", "fact:5:7", "pow2:6:5". Throws std::invalid_argument.
  static SimulatedUltrafilter parse(const std::string& text);

  Decision decide(const EventuallyPeriodicSet& s) const;
  bool decides(const EventuallyPeriodicSet& s) const { return decide(s).member; }

  /// Tower lengthened (if needed) so that `period` divides its last modulus.
  /// New levels lift the previous residue with digit 0.
  SimulatedUltrafilter extended_to(std::uint64_t period) const;

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  std::string str() const;

  friend bool operator==(const SimulatedUltrafilter&, const SimulatedUltrafilter&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> residues_;
};

struct FilterAxiomReport {
  bool upward_closure = true;
  bool finite_intersection = true;
  bool complement_dichotomy = true;
  bool cofinite_membership = true;
  bool all() const {
    return upward_closure && finite_intersection && complement_dichotomy && cofinite_membership;
  }
};

/// Checks the ultrafilter laws on the pair (S, T) and on their tails.
FilterAxiomReport filter_axiom_check(const SimulatedUltrafilter& u, const EventuallyPeriodicSet& s,
                                     const EventuallyPeriodicSet& t);

/// Random set with prefix length <= max_prefix and period in [1, max_period].
EventuallyPeriodicSet random_periodic_set(std::mt19937_64& rng, unsigned max_prefix,
                                          unsigned max_period);

}  // namespace chainorder
