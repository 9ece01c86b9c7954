#include "chainorder/inverse_limit.hpp"

#include <map>
#include <tuple>

namespace chainorder {

InverseSystem::InverseSystem(std::vector<PLMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw std::invalid_argument("InverseSystem: no bonding maps");
}

std::shared_ptr<const InverseSystem> InverseSystem::tent() {
  static const auto sys = std::make_shared<const InverseSystem>(std::vector<PLMap>{PLMap::tent()});
  return sys;
}

bool InverseSystem::is_tent() const {
  const auto t = PLMap::tent();
  for (const auto& m : maps_)
    if (!(m == t)) return false;
  return true;
}

ThreadPoint::ThreadPoint(std::shared_ptr<const InverseSystem> sys, std::vector<Rational> stem,
                         TailKind kind)
    : sys_(std::move(sys)), stem_(std::move(stem)), kind_(kind) {
  if (!sys_) throw std::invalid_argument("ThreadPoint: null system");
  if (stem_.empty()) throw std::invalid_argument("ThreadPoint: empty stem");
  check_stem();
}

void ThreadPoint::check_stem() const {
  for (std::size_t i = 0; i < stem_.size(); ++i) {
    if (stem_[i] < Rational(0) || stem_[i] > Rational(1))
      throw std::invalid_argument("ThreadPoint: coordinate " + std::to_string(i) + " = " +
                                  stem_[i].str() + " outside [0,1]");
    if (i + 1 < stem_.size() && sys_->map(i).eval(stem_[i + 1]) != stem_[i])
      throw std::invalid_argument("ThreadPoint: f_" + std::to_string(i) + "(x_" +
                                  std::to_string(i + 1) + ") != x_" + std::to_string(i));
  }
}

ThreadPoint ThreadPoint::from_stem(std::shared_ptr<const InverseSystem> sys,
                                   std::vector<Rational> stem) {
  return ThreadPoint(std::move(sys), std::move(stem), TailKind::None);
}

ThreadPoint ThreadPoint::zero_tail(std::shared_ptr<const InverseSystem> sys,
                                   std::vector<Rational> stem) {
  ThreadPoint p(std::move(sys), std::move(stem), TailKind::Zero);
  if (p.stem_.back() != Rational(0))
    throw std::invalid_argument("ThreadPoint: zero tail needs a stem ending in 0");
  for (std::size_t i = 0; i < p.sys_->cycle_length(); ++i)
    if (p.sys_->map(i).eval(0) != Rational(0))
      throw std::invalid_argument("ThreadPoint: zero tail needs f_i(0) = 0");
  return p;
}

ThreadPoint ThreadPoint::zero(std::shared_ptr<const InverseSystem> sys) {
  return zero_tail(std::move(sys), {Rational(0)});
}

ThreadPoint ThreadPoint::word_tail(std::shared_ptr<const InverseSystem> sys,
                                   std::vector<Rational> stem, std::vector<bool> word) {
  ThreadPoint p(std::move(sys), std::move(stem), TailKind::Word);
  p.word_ = std::move(word);
  return p;
}

ThreadPoint ThreadPoint::periodic_tail(std::shared_ptr<const InverseSystem> sys,
                                       std::vector<Rational> stem, EventuallyPeriodicSet word) {
  ThreadPoint p(std::move(sys), std::move(stem), TailKind::Periodic);
  p.periodic_ = std::move(word);
  return p;
}

std::optional<std::uint64_t> ThreadPoint::max_depth() const {
  const std::uint64_t n = stem_.size() - 1;
  switch (kind_) {
    case TailKind::None: return n;
    case TailKind::Word: return n + word_.size();
    default: return std::nullopt;
  }
}

bool ThreadPoint::branch_bit(std::uint64_t n) const {
  const std::uint64_t end = stem_.size() - 1;
  if (n <= end) throw std::invalid_argument("branch_bit: level inside the stem");
  const std::uint64_t j = n - end - 1;
  switch (kind_) {
    case TailKind::Zero: return false;
    case TailKind::Word:
      if (j >= word_.size()) throw DepthError("branch word exhausted at level " + std::to_string(n));
      return word_[j];
    case TailKind::Periodic: return periodic_->contains(j);
    case TailKind::None: break;
  }
  throw DepthError("stem-only thread has no coordinate " + std::to_string(n));
}

std::vector<Rational> ThreadPoint::coordinates(std::uint64_t depth) const {
  if (auto m = max_depth(); m && depth > *m)
    throw DepthError("thread coordinates computable to " + std::to_string(*m) +
                     ", requested " + std::to_string(depth));
  std::vector<Rational> out;
  out.reserve(depth + 1);
  for (std::uint64_t i = 0; i <= depth && i < stem_.size(); ++i) out.push_back(stem_[i]);
  while (out.size() <= depth) {
    const std::uint64_t n = out.size();
    if (kind_ == TailKind::Zero) {
      out.emplace_back(0);
      continue;
    }
    const auto pre = sys_->map(n - 1).preimages(out.back());
    if (pre.empty()) throw std::domain_error("bonding map not onto: no preimage of " + out.back().str());
    out.push_back(branch_bit(n) ? pre.back() : pre.front());
  }
  return out;
}

Rational ThreadPoint::coordinate(std::uint64_t n) const { return coordinates(n).back(); }

namespace {

Relation cmp(const Rational& a, const Rational& b) {
  return a < b ? Relation::LT : (b < a ? Relation::GT : Relation::EQ);
}

bool le_bit(Relation r) { return r != Relation::GT; }
bool ge_bit(Relation r) { return r != Relation::LT; }

// Sign automaton for two tent threads: strict states keep their orientation
// under Left, flip under Right, and split by the branch when the branches
// differ. Equal states track whether the common value is 0, 1 or neither.
enum class SignState { LT, GT, EQ0, EQ1, EQOther };

SignState initial_state(const Rational& a, const Rational& b) {
  if (a < b) return SignState::LT;
  if (b < a) return SignState::GT;
  if (a == Rational(0)) return SignState::EQ0;
  if (a == Rational(1)) return SignState::EQ1;
  return SignState::EQOther;
}

Relation relation_of(SignState s) {
  switch (s) {
    case SignState::LT: return Relation::LT;
    case SignState::GT: return Relation::GT;
    default: return Relation::EQ;
  }
}

SignState step(SignState s, bool bx, bool by) {
  switch (s) {
    case SignState::LT:
    case SignState::GT:
      if (bx != by) return bx ? SignState::GT : SignState::LT;
      if (!bx) return s;
      return s == SignState::LT ? SignState::GT : SignState::LT;
    case SignState::EQ1: return SignState::EQOther;
    case SignState::EQ0:
      if (bx != by) return bx ? SignState::GT : SignState::LT;
      return bx ? SignState::EQ1 : SignState::EQ0;
    case SignState::EQOther:
      if (bx != by) return bx ? SignState::GT : SignState::LT;
      return SignState::EQOther;
  }
  return s;
}

OrderCertificate sets_from_relations(const std::vector<Relation>& rel, std::size_t cycle_start,
                                     std::string basis) {
  std::vector<bool> lp, lq, gp, gq;
  for (std::size_t n = 0; n < rel.size(); ++n) {
    (n < cycle_start ? lp : lq).push_back(le_bit(rel[n]));
    (n < cycle_start ? gp : gq).push_back(ge_bit(rel[n]));
  }
  return {EventuallyPeriodicSet(lp, lq), EventuallyPeriodicSet(gp, gq), std::nullopt,
          std::move(basis)};
}

bool periodic_like(const ThreadPoint& p) {
  return p.tail_kind() == TailKind::Zero || p.tail_kind() == TailKind::Periodic;
}

std::pair<std::uint64_t, std::uint64_t> word_shape(const ThreadPoint& p) {
  if (p.tail_kind() == TailKind::Zero) return {0, 1};
  return {p.periodic_word()->prefix().size(), p.periodic_word()->period()};
}

}  // namespace

Relation compare_level(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t n) {
  return cmp(x.coordinate(n), y.coordinate(n));
}

std::vector<Relation> level_trace(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth) {
  const auto cx = x.coordinates(depth), cy = y.coordinates(depth);
  std::vector<Relation> out;
  out.reserve(depth + 1);
  for (std::uint64_t n = 0; n <= depth; ++n) out.push_back(cmp(cx[n], cy[n]));
  return out;
}

std::optional<OrderCertificate> exact_order_sets(const ThreadPoint& x, const ThreadPoint& y) {
  const std::uint64_t nx = x.stem().size() - 1, ny = y.stem().size() - 1;
  const std::uint64_t m = std::max(nx, ny);

  if (x.tail_kind() == TailKind::Zero && y.tail_kind() == TailKind::Zero) {
    auto rel = level_trace(x, y, m);
    rel.push_back(Relation::EQ);  // both zero from level m + 1 on
    return sets_from_relations(rel, rel.size() - 1, "zero tails");
  }
  if (!x.system().is_tent() || !y.system().is_tent() || !periodic_like(x) || !periodic_like(y))
    return std::nullopt;

  const auto cx = x.coordinates(m), cy = y.coordinates(m);
  std::vector<Relation> rel;
  for (std::uint64_t n = 0; n < m; ++n) rel.push_back(cmp(cx[n], cy[n]));

  const auto [px, mx] = word_shape(x);
  const auto [py, my] = word_shape(y);
  std::map<std::tuple<int, std::uint64_t, std::uint64_t>, std::uint64_t> seen;
  SignState s = initial_state(cx[m], cy[m]);
  for (std::uint64_t n = m;; ++n) {
    // bit for coordinate n+1 of x has word index n - nx
    if (n - nx >= px && n - ny >= py) {
      const auto key = std::make_tuple(static_cast<int>(s), (n - nx - px) % mx, (n - ny - py) % my);
      auto [it, fresh] = seen.emplace(key, n);
      if (!fresh) return sets_from_relations(rel, it->second, "tent sign automaton");
    }
    rel.push_back(relation_of(s));
    s = step(s, x.branch_bit(n + 1), y.branch_bit(n + 1));
  }
}

ComparisonVerdict inverse_limit_order(const ThreadPoint& x, const ThreadPoint& y,
                                      const SimulatedUltrafilter& u, std::uint64_t depth,
                                      const std::optional<OrderCertificate>& certificate) {
  const auto trace = level_trace(x, y, depth);
  auto cert = exact_order_sets(x, y);
  if (!cert) cert = certificate;
  if (!cert) return unknown_verdict(depth, "no periodic representation or certificate");
  for (std::uint64_t n = 0; n <= depth; ++n) {
    if (cert->le.contains(n) != le_bit(trace[n]) || cert->ge.contains(n) != ge_bit(trace[n]))
      throw std::invalid_argument("order certificate disagrees with the level trace at level " +
                                  std::to_string(n));
  }
  return verdict_from_certificate(*cert, u, depth);
}

Rational fiber_diameter_bound(const InverseSystem&, std::uint64_t n) {
  // points of one fiber share x_0..x_n; the remaining terms sum to at most 2^-n
  return Rational::power_of_two(-static_cast<long>(n));
}

Rational truncated_distance(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth) {
  const auto cx = x.coordinates(depth), cy = y.coordinates(depth);
  Rational d(0);
  for (std::uint64_t i = 0; i <= depth; ++i)
    d += Rational::power_of_two(-static_cast<long>(i)) * (cx[i] - cy[i]).abs();
  return d;
}

Rational lipschitz_weight(const InverseSystem& sys, std::uint64_t n) {
  // |x_i - y_i| <= prod_{i<=j<n} Lip(f_j) |x_n - y_n|
  Rational c(0), prod(1);
  for (std::uint64_t i = n + 1; i-- > 0;) {
    c += Rational::power_of_two(-static_cast<long>(i)) * prod;
    if (i > 0) prod *= sys.map(i - 1).lipschitz();
  }
  return c;
}

Rational epsilon_map_modulus(const InverseSystem& sys, std::uint64_t n, const Rational& eps) {
  const Rational gamma = fiber_diameter_bound(sys, n);
  if (eps <= gamma)
    throw std::invalid_argument("epsilon_map_modulus: eps = " + eps.str() +
                                " does not exceed the fiber bound " + gamma.str());
  return min(Rational(1), (eps - gamma) / lipschitz_weight(sys, n));
}

}  // namespace chainorder
