#pragma once

#include <string>
#include <vector>

#include "chainorder/rational.hpp"

namespace chainorder {

/// Continuous piecewise-linear self-map of [0,1] with rational breakpoints.
class PLMap {
 public:
  /// breakpoints must be strictly increasing from 0 to 1; values lie in
  /// [0,1], one per breakpoint. Throws std::invalid_argument otherwise.
  PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

  /// t -> 2t on [0,1/2], t -> 2 - 2t on [1/2,1].
  static PLMap tent();
  static PLMap identity();

  /// Throws std::domain_error when t is outside [0,1].
  Rational eval(const Rational& t) const;

  /// All t with eval(t) == y, ascending and without duplicates. Throws
  /// std::domain_error when some segment is constant at y.
  std::vector<Rational> preimages(const Rational& y) const;

  /// Maximum absolute slope.
  Rational lipschitz() const;

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t segments() const { return breaks_.size() - 1; }

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::size_t segment_of(const Rational& t) const;

  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

/// (f o g)(t) = f(g(t)).
PLMap compose(const PLMap& f, const PLMap& g);

/// B_0 = {seed}, B_{i+1} = f^{-1}[B_i]; returns B_i ascending.
std::vector<Rational> iterated_preimage_set(const PLMap& f, const Rational& seed, unsigned i);

}  // namespace chainorder
