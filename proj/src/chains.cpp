#include "chainorder/chains.hpp"

#include <algorithm>

namespace chainorder {

std::string to_string(LevelRelation r) {
  switch (r) {
    case LevelRelation::LEOnly: return "LE_only";
    case LevelRelation::GEOnly: return "GE_only";
    case LevelRelation::Both: return "BOTH";
  }
  return "?";
}

LevelRelation level_relation(const IndexRange& x, const IndexRange& y) {
  const bool le = x.lo <= y.hi, ge = y.lo <= x.hi;
  if (le && ge) return LevelRelation::Both;
  return le ? LevelRelation::LEOnly : LevelRelation::GEOnly;
}

LevelRelation swap(LevelRelation r) {
  if (r == LevelRelation::LEOnly) return LevelRelation::GEOnly;
  if (r == LevelRelation::GEOnly) return LevelRelation::LEOnly;
  return r;
}

IndexRange reverse_range(const IndexRange& r, std::int64_t k) {
  return IndexRange(k - r.hi + 1, k - r.lo + 1);
}

OrderCertificate stabilized_certificate(const std::vector<LevelRelation>& head, LevelRelation tail,
                                        std::uint64_t threshold, std::string basis) {
  if (threshold < 1 || head.size() + 1 < threshold)
    throw std::invalid_argument("stabilized_certificate: head shorter than threshold - 1");
  std::vector<bool> le, ge;
  // index 0 mirrors level 1
  const LevelRelation first = threshold > 1 ? head[0] : tail;
  le.push_back(has_le(first));
  ge.push_back(has_ge(first));
  for (std::uint64_t n = 1; n < threshold; ++n) {
    le.push_back(has_le(head[n - 1]));
    ge.push_back(has_ge(head[n - 1]));
  }
  return {EventuallyPeriodicSet(le, {has_le(tail)}), EventuallyPeriodicSet(ge, {has_ge(tail)}),
          threshold, std::move(basis)};
}

IntervalChain::IntervalChain(std::int64_t k) : k_(k) {
  if (k < 1) throw std::invalid_argument("IntervalChain: k must be >= 1");
}

std::pair<Rational, Rational> IntervalChain::link(std::int64_t i) const {
  if (i < 1 || i > k_) throw std::out_of_range("IntervalChain::link: index out of range");
  const Rational q(1, 4 * k_);
  return {Rational(i - 1, k_) - q, Rational(i, k_) + q};
}

Rational IntervalChain::mesh() const { return Rational(3, 2 * k_); }

IndexRange IntervalChain::index_of(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw std::domain_error("IntervalChain::index_of: " + t.str() + " outside [0,1]");
  // t in e_i  <=>  k t - 1/4 < i < k t + 5/4
  const Rational kt = Rational(k_) * t;
  mpz_class lo = (kt - Rational(1, 4)).floor() + 1;
  mpz_class hi = (kt + Rational(5, 4)).ceil() - 1;
  const std::int64_t l = std::max<std::int64_t>(1, lo.get_si());
  const std::int64_t h = std::min<std::int64_t>(k_, hi.get_si());
  return IndexRange(l, h);
}

IntervalChain canonical_interval_chain(std::int64_t k) { return IntervalChain(k); }

Rational pullback_mesh_target(const InverseSystem& sys, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("pullback levels start at n = 1");
  return fiber_diameter_bound(sys, n) + Rational(1, static_cast<long>(n));
}

std::int64_t pullback_link_count(const InverseSystem& sys, std::uint64_t n) {
  const Rational delta = epsilon_map_modulus(sys, n, pullback_mesh_target(sys, n));
  // need 3/(2k) < delta
  const mpz_class k = (Rational(3, 2) / delta).floor() + 1;
  return k.get_si();
}

ChainLevel<ThreadPoint> pullback_chain(std::shared_ptr<const InverseSystem> sys, std::uint64_t n,
                                       const IntervalChain& e) {
  const Rational eps = pullback_mesh_target(*sys, n);
  const Rational delta = epsilon_map_modulus(*sys, n, eps);
  if (!(e.mesh() < delta))
    throw std::invalid_argument("pullback_chain: mesh " + e.mesh().str() +
                                " is not below the modulus " + delta.str() + " at level " +
                                std::to_string(n));
  ChainLevel<ThreadPoint> d;
  d.level = n;
  d.k = e.k();
  d.mesh_bound = eps;
  d.index_of = [e, n](const ThreadPoint& p) { return e.index_of(p.coordinate(n)); };
  return d;
}

ChainSequence<ThreadPoint> pullback_sequence(std::shared_ptr<const InverseSystem> sys) {
  ChainSequence<ThreadPoint> s;
  s.name = "pullback";
  s.level = [sys](std::uint64_t n) {
    return pullback_chain(sys, n, IntervalChain(pullback_link_count(*sys, n)));
  };
  return s;
}

FiniteOrder::FiniteOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {
  std::vector<bool> seen(rank_.size(), false);
  for (auto r : rank_) {
    if (r >= rank_.size() || seen[r])
      throw std::invalid_argument("FiniteOrder: rank vector is not a permutation");
    seen[r] = true;
  }
}

FiniteOrder FiniteOrder::from_relation(const std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  for (const auto& row : le)
    if (row.size() != n) throw std::invalid_argument("FiniteOrder: relation matrix not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!le[i][i]) throw std::invalid_argument("FiniteOrder: not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[i][j] == le[j][i])
        throw std::invalid_argument("FiniteOrder: not total or not antisymmetric");
      for (std::size_t l = 0; l < n; ++l)
        if (le[i][j] && le[j][l] && !le[i][l])
          throw std::invalid_argument("FiniteOrder: not transitive");
    }
  }
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && le[j][i]) ++rank[i];
  return FiniteOrder(std::move(rank));
}

std::string to_string(OrderAgreement a) {
  switch (a) {
    case OrderAgreement::Equal: return "equal";
    case OrderAgreement::Opposite: return "opposite";
    case OrderAgreement::Neither: return "neither";
  }
  return "?";
}

OrderAgreement equal_or_opposite(const FiniteOrder& a, const FiniteOrder& b) {
  if (a.size() != b.size()) throw std::invalid_argument("equal_or_opposite: size mismatch");
  bool same = true, opposite = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a.less(i, j) == b.less(i, j))
        opposite = false;
      else
        same = false;
    }
  if (same) return OrderAgreement::Equal;
  return opposite ? OrderAgreement::Opposite : OrderAgreement::Neither;
}

bool triple_hypothesis(const FiniteOrder& a, const FiniteOrder& b) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (!(a.less(x, y) && a.less(y, z))) continue;
        const bool up = b.less(x, y) && b.less(y, z);
        const bool down = b.less(y, x) && b.less(z, y);
        if (!up && !down) return false;
      }
  return true;
}

}  // namespace chainorder
