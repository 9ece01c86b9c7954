#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainorder/inverse_limit.hpp"
#include "chainorder/periodic_set.hpp"
#include "chainorder/rational.hpp"
#include "chainorder/ultrafilter.hpp"
#include "chainorder/verdict.hpp"

namespace chainorder {

/// Outcome of the per-chain preorder: x <=_D y iff lo(x) <= hi(y).
enum class LevelRelation { LEOnly, GEOnly, Both };

std::string to_string(LevelRelation r);
LevelRelation level_relation(const IndexRange& x, const IndexRange& y);
LevelRelation swap(LevelRelation r);
inline bool has_le(LevelRelation r) { return r != LevelRelation::GEOnly; }
inline bool has_ge(LevelRelation r) { return r != LevelRelation::LEOnly; }

/// i -> k - i + 1.
IndexRange reverse_range(const IndexRange& r, std::int64_t k);

/// One chain D_n, described by which links contain a point.
template <class Point>
struct ChainLevel {
  std::uint64_t level = 0;
  std::int64_t k = 0;
  Rational mesh_bound;
  std::function<IndexRange(const Point&)> index_of;

  /// index_of with the range checked against k.
  IndexRange index(const Point& p) const {
    IndexRange r = index_of(p);
    if (r.hi > k)
      throw std::logic_error("chain level " + std::to_string(level) + ": link " +
                             std::to_string(r.hi) + " exceeds k = " + std::to_string(k));
    return r;
  }
};

template <class Point>
LevelRelation level_preorder(const ChainLevel<Point>& d, const Point& x, const Point& y) {
  return level_relation(d.index(x), d.index(y));
}

template <class Point>
ChainLevel<Point> reverse(const ChainLevel<Point>& d) {
  ChainLevel<Point> r = d;
  r.index_of = [inner = d.index_of, k = d.k](const Point& p) {
    return reverse_range(inner(p), k);
  };
  return r;
}

/// Levels 1..depth of a family {D_n}; `certify` may supply index sets with
/// a proof-backed threshold for a pair.
template <class Point>
struct ChainSequence {
  std::string name;
  std::function<ChainLevel<Point>(std::uint64_t)> level;
  std::function<std::optional<OrderCertificate>(const Point&, const Point&)> certify;
};

template <class Point>
ChainSequence<Point> reversed(const ChainSequence<Point>& s, std::string name) {
  ChainSequence<Point> r;
  r.name = std::move(name);
  r.level = [inner = s.level](std::uint64_t n) { return reverse(inner(n)); };
  if (s.certify) {
    r.certify = [inner = s.certify](const Point& x, const Point& y) -> std::optional<OrderCertificate> {
      auto c = inner(x, y);
      if (c) std::swap(c->le, c->ge);
      return c;
    };
  }
  return r;
}

struct LevelRecord {
  std::uint64_t level;
  std::int64_t k;
  Rational mesh;
  IndexRange idx_x;
  IndexRange idx_y;
  LevelRelation relation;
};

struct ChainComparison {
  ComparisonVerdict verdict;
  std::vector<LevelRecord> trace;
};

/// Certificate whose sets follow `head` (levels 1..threshold-1) and then
/// `tail` from `threshold` on. Index 0 carries the level-1 value.
OrderCertificate stabilized_certificate(const std::vector<LevelRelation>& head, LevelRelation tail,
                                        std::uint64_t threshold, std::string basis);

/// Definition-2 ultrafilter order of x and y along the family, with the
/// level trace for 1..depth. A certificate that contradicts the trace is a
/// logic error.
template <class Point>
ChainComparison chain_order_compare(const ChainSequence<Point>& seq, const Point& x,
                                    const Point& y, const SimulatedUltrafilter& u,
                                    std::uint64_t depth) {
  if (depth < 1) throw std::invalid_argument("chain_order_compare: depth must be >= 1");
  ChainComparison out;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const auto d = seq.level(n);
    const IndexRange ix = d.index(x), iy = d.index(y);
    out.trace.push_back({n, d.k, d.mesh_bound, ix, iy, level_relation(ix, iy)});
  }
  std::optional<OrderCertificate> cert;
  if (seq.certify) cert = seq.certify(x, y);
  if (!cert) {
    out.verdict = unknown_verdict(depth, "no certificate");
    return out;
  }
  for (const auto& rec : out.trace) {
    const bool le = has_le(rec.relation), ge = has_ge(rec.relation);
    const bool bad = cert->le.contains(rec.level) != le || cert->ge.contains(rec.level) != ge ||
                     (rec.level == 1 && (cert->le.contains(0) != le || cert->ge.contains(0) != ge));
    if (bad)
      throw std::logic_error(seq.name + ": certificate disagrees with level " +
                             std::to_string(rec.level));
  }
  out.verdict = verdict_from_certificate(*cert, u, depth);
  return out;
}

struct BetweenCheck {
  bool holds = true;
  std::optional<std::uint64_t> first_failure;
  std::uint64_t levels_checked = 0;
};

/// Checks that z is never between x and y (in either direction) on every
/// level <= depth whose mesh bound is below threshold_mesh.
template <class Point>
BetweenCheck never_between_after(const ChainSequence<Point>& seq, const Point& x, const Point& y,
                                 const Point& z, const Rational& threshold_mesh,
                                 std::uint64_t depth) {
  if (z == x || z == y) throw std::invalid_argument("never_between_after: z coincides with x or y");
  BetweenCheck out;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const auto d = seq.level(n);
    if (!(d.mesh_bound < threshold_mesh)) continue;
    ++out.levels_checked;
    const IndexRange ix = d.index(x), iy = d.index(y), iz = d.index(z);
    const auto xz = level_relation(ix, iz), zy = level_relation(iz, iy);
    const bool between = (has_le(xz) && has_le(zy)) || (has_ge(xz) && has_ge(zy));
    if (between) {
      out.holds = false;
      out.first_failure = n;
      return out;
    }
  }
  return out;
}

/// Canonical chain of k overlapping subintervals of [0,1]:
/// e_i = ((i-1)/k - 1/(4k), i/k + 1/(4k)) intersected with [0,1].
class IntervalChain {
 public:
  explicit IntervalChain(std::int64_t k);

  std::int64_t k() const { return k_; }
  /// Open endpoints of e_i before clipping to [0,1].
  std::pair<Rational, Rational> link(std::int64_t i) const;
  /// 3/(2k).
  Rational mesh() const;
  /// Links containing t in [0,1]; throws std::domain_error outside.
  IndexRange index_of(const Rational& t) const;

 private:
  std::int64_t k_;
};

IntervalChain canonical_interval_chain(std::int64_t k);

/// eps_n = 2^-n + 1/n.
Rational pullback_mesh_target(const InverseSystem& sys, std::uint64_t n);
/// Smallest k whose canonical chain has mesh below epsilon_map_modulus(sys, n, eps_n).
std::int64_t pullback_link_count(const InverseSystem& sys, std::uint64_t n);

/// D_n = p_n^{-1}(E): a thread lies in the links of E containing its n-th
/// coordinate. Throws std::invalid_argument when mesh(E) is not below the
/// modulus for eps_n. The system must outlive the returned level.
ChainLevel<ThreadPoint> pullback_chain(std::shared_ptr<const InverseSystem> sys, std::uint64_t n,
                                       const IntervalChain& e);

ChainSequence<ThreadPoint> pullback_sequence(std::shared_ptr<const InverseSystem> sys);

/// A total order on {0..n-1} given by rank[i] = position of i.
class FiniteOrder {
 public:
  /// Throws std::invalid_argument unless rank is a permutation.
  explicit FiniteOrder(std::vector<std::size_t> rank);
  /// From le[i][j] = (i <= j); throws unless it is a total order.
  static FiniteOrder from_relation(const std::vector<std::vector<bool>>& le);

  std::size_t size() const { return rank_.size(); }
  bool less(std::size_t i, std::size_t j) const { return rank_[i] < rank_[j]; }
  const std::vector<std::size_t>& rank() const { return rank_; }

 private:
  std::vector<std::size_t> rank_;
};

enum class OrderAgreement { Equal, Opposite, Neither };
std::string to_string(OrderAgreement a);

/// Throws std::invalid_argument when the orders have different sizes.
OrderAgreement equal_or_opposite(const FiniteOrder& a, const FiniteOrder& b);

/// For every triple with x <_a y <_a z: x <_b y <_b z or x >_b y >_b z.
bool triple_hypothesis(const FiniteOrder& a, const FiniteOrder& b);

}  // namespace chainorder
