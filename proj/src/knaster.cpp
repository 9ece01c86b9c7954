#include "chainorder/knaster.hpp"

#include <stdexcept>

namespace chainorder {

namespace {

Rational half(const Rational& v) { return v / Rational(2); }

}  // namespace

std::pair<std::vector<Rational>, std::vector<Rational>> witness_coordinates(
    const EventuallyPeriodicSet& a, std::uint64_t depth) {
  std::vector<Rational> x{Rational(1, 2)}, y{Rational(1, 2)};
  if (depth >= 1) {
    if (a.contains(1)) {
      x.emplace_back(3, 4);
      y.emplace_back(1, 4);
    } else {
      x.emplace_back(1, 4);
      y.emplace_back(3, 4);
    }
  }
  for (std::uint64_t i = 2; i <= depth; ++i) {
    const Rational& px = x.back();
    const Rational& py = y.back();
    // preimages of v are v/2 <= 1/2 <= 1 - v/2
    const bool x_smaller = px < py;
    const bool want_gt = a.contains(i);
    // the smaller point wins the comparison only by going outer
    const bool smaller_outer = x_smaller ? want_gt : !want_gt;
    const Rational& ps = x_smaller ? px : py;
    const Rational& pl = x_smaller ? py : px;
    const Rational s = smaller_outer ? Rational(1) - half(ps) : half(ps);
    const Rational l = half(pl);
    x.push_back(x_smaller ? s : l);
    y.push_back(x_smaller ? l : s);
  }
  return {x, y};
}

WitnessPair build_witness(const EventuallyPeriodicSet& a, std::uint64_t depth) {
  if (depth < 1) throw std::invalid_argument("build_witness: depth must be >= 1");
  // branch bit j produces level j + 1; x goes right when it was behind and
  // must get ahead, y when it was ahead and must fall behind (level 0 counts
  // as "behind" for x and "ahead" for y)
  const EventuallyPeriodicSet next = a.shifted_down(1);
  const EventuallyPeriodicSet x_behind = a.complement().with(0, true);
  const EventuallyPeriodicSet y_behind = a.with(0, true);
  const EventuallyPeriodicSet bx = next.intersect(x_behind);
  const EventuallyPeriodicSet by = next.complement().intersect(y_behind);
  const auto sys = InverseSystem::tent();
  WitnessPair w{a,
                depth,
                ThreadPoint::periodic_tail(sys, {Rational(1, 2)}, bx),
                ThreadPoint::periodic_tail(sys, {Rational(1, 2)}, by),
                a.is_finite() || a.is_cofinite()};
  const auto [cx, cy] = witness_coordinates(a, depth);
  if (w.x.coordinates(depth) != cx || w.y.coordinates(depth) != cy)
    throw std::logic_error("build_witness: periodic threads disagree with the induction");
  return w;
}

OrderCertificate witness_certificate(const EventuallyPeriodicSet& a) {
  return {a.complement().with(0, true), a.with(0, true), 1, "knaster witness construction"};
}

WitnessCheck check_witness(const WitnessPair& w) {
  WitnessCheck c;
  const PLMap& f = w.x.system().map(0);
  const auto xs = w.x.coordinates(w.depth), ys = w.y.coordinates(w.depth);
  c.consistent = xs[0] == Rational(1, 2) && ys[0] == Rational(1, 2);
  for (std::uint64_t i = 1; i <= w.depth; ++i) {
    if (f.eval(xs[i]) != xs[i - 1] || f.eval(ys[i]) != ys[i - 1]) c.consistent = false;
    const Rational scale = Rational::power_of_two(static_cast<long>(i + 1));
    if (!(xs[i] * scale).is_integer() || !(ys[i] * scale).is_integer()) c.dyadic = false;
    const bool gt = xs[i] > ys[i];
    if (gt) c.gt_levels.push_back(i);
    if (gt != w.a.contains(i)) c.pattern = false;
  }
  return c;
}

DistinctOrders demonstrate_distinct_orders(const EventuallyPeriodicSet& a, std::uint64_t depth,
                                           const SimulatedUltrafilter& u1,
                                           const SimulatedUltrafilter& u2) {
  if (!u1.decides(a) || u2.decides(a))
    throw std::invalid_argument("demonstrate_distinct_orders: needs A in " + u1.str() +
                                " and A not in " + u2.str());
  DistinctOrders out{build_witness(a, depth), {}, {}, {}, {}, false};
  out.check = check_witness(out.pair);
  out.trace = level_trace(out.pair.x, out.pair.y, depth);
  const auto cert = witness_certificate(a);
  out.under_u1 = inverse_limit_order(out.pair.x, out.pair.y, u1, depth, cert);
  out.under_u2 = inverse_limit_order(out.pair.x, out.pair.y, u2, depth, cert);
  out.opposite = out.under_u1.relation && out.under_u2.relation &&
                 *out.under_u1.relation == flip(*out.under_u2.relation) &&
                 *out.under_u1.relation != Relation::EQ;
  return out;
}

BruteForceResult brute_force_oracle(const EventuallyPeriodicSet& a, std::uint64_t depth) {
  if (depth < 1 || depth > 10) throw std::invalid_argument("brute_force_oracle: depth must be in 1..10");
  const std::uint64_t words = 1ULL << depth;
  // coordinates for every branch word; bit i-1 picks the right preimage at level i
  std::vector<std::vector<Rational>> coords(words);
  for (std::uint64_t w = 0; w < words; ++w) {
    Rational v(1, 2);
    coords[w].push_back(v);
    for (std::uint64_t i = 1; i <= depth; ++i) {
      v = ((w >> (i - 1)) & 1) ? Rational(1) - half(v) : half(v);
      coords[w].push_back(v);
    }
  }
  const auto [cx, cy] = witness_coordinates(a, depth);
  BruteForceResult r;
  for (std::uint64_t wx = 0; wx < words; ++wx) {
    for (std::uint64_t wy = 0; wy < words; ++wy) {
      bool ok = true;
      for (std::uint64_t i = 1; i <= depth && ok; ++i)
        ok = (coords[wx][i] > coords[wy][i]) == a.contains(i);
      if (!ok) continue;
      ++r.realizing_pairs;
      if (coords[wx] == cx && coords[wy] == cy) r.constructed_found = true;
    }
  }
  return r;
}

}  // namespace chainorder
