#include "chainorder/experiments.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chainorder/knaster.hpp"

namespace chainorder {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string lr_bits(const std::string& word) {
  std::string bits;
  for (char c : word) {
    if (c == 'L' || c == '0') bits += '0';
    else if (c == 'R' || c == '1') bits += '1';
    else if (c != '/') throw std::invalid_argument("bad branch letter '" + std::string(1, c) + "'");
    else bits += c;
  }
  return bits;
}

Json trace_json(const std::vector<LevelRecord>& trace) {
  Json rows = Json::array();
  for (const auto& rec : trace) rows.push_back(to_json(rec));
  return rows;
}

Json points_json(const std::vector<CatalogPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.str());
  return a;
}

}  // namespace

EventuallyPeriodicSet parse_set_spec(const std::string& text) {
  if (text == "even" || text == "evens") return EventuallyPeriodicSet::evens();
  if (text == "odd" || text == "odds") return EventuallyPeriodicSet::odds();
  if (text == "empty") return EventuallyPeriodicSet::empty();
  if (text == "all") return EventuallyPeriodicSet::all();
  if (text.rfind("cofinite:", 0) == 0)
    return EventuallyPeriodicSet::cofinite_from(std::stoull(text.substr(9)));
  if (text.rfind("finite:", 0) == 0) {
    std::vector<std::uint64_t> members;
    for (const auto& m : split(text.substr(7), ',')) members.push_back(std::stoull(m));
    return EventuallyPeriodicSet::finite(members);
  }
  return EventuallyPeriodicSet::parse_bits(text);
}

ThreadPoint parse_thread_spec(const std::string& text) {
  const auto semi = text.find(';');
  const std::string stem_text = text.substr(0, semi);
  const std::string tail = semi == std::string::npos ? "" : text.substr(semi + 1);
  std::vector<Rational> stem;
  for (const auto& c : split(stem_text, ',')) stem.push_back(Rational::parse(c));
  if (stem.empty()) throw std::invalid_argument("thread '" + text + "' has an empty stem");
  const auto sys = InverseSystem::tent();
  if (tail.empty()) return ThreadPoint::from_stem(sys, stem);
  if (tail == "zero") return ThreadPoint::zero_tail(sys, stem);
  if (tail.rfind("word:", 0) == 0) {
    std::vector<bool> word;
    for (char c : lr_bits(tail.substr(5))) word.push_back(c == '1');
    return ThreadPoint::word_tail(sys, stem, word);
  }
  if (tail.rfind("periodic:", 0) == 0)
    return ThreadPoint::periodic_tail(sys, stem,
                                      EventuallyPeriodicSet::parse_bits(lr_bits(tail.substr(9))));
  throw std::invalid_argument("unknown thread tail '" + tail + "'");
}

PointOrder order_on(const ChainSequence<CatalogPoint>& seq, const std::vector<CatalogPoint>& pts,
                    const SimulatedUltrafilter& u, std::uint64_t depth) {
  const std::size_t m = pts.size();
  PointOrder out;
  out.verdicts.assign(m, std::vector<ComparisonVerdict>(m));
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto& v = out.verdicts[i][j];
      v = chain_order_compare(seq, pts[i], pts[j], u, depth).verdict;
      if (!v.decided()) out.all_decided = false;
      else le[i][j] = *v.relation != Relation::GT;
    }
  }
  if (out.all_decided) {
    try {
      out.order = FiniteOrder::from_relation(le);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

std::optional<Relation> strict_direction(LevelRelation r) {
  if (r == LevelRelation::LEOnly) return Relation::LT;
  if (r == LevelRelation::GEOnly) return Relation::GT;
  return std::nullopt;
}

std::vector<std::string> counted_variants(SpaceId space) {
  if (space != SpaceId::S3) return variants(space);
  std::vector<std::string> out;
  for (int w = 0; w < 64; ++w) {
    std::string s;
    for (int b = 0; b < 6; ++b) s += ((w >> b) & 1) ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

Report catalog_report() {
  Report r;
  r.experiment = "catalog";
  Json entries = Json::array();
  for (const auto& e : catalog_list()) {
    Json wit = Json::array();
    for (const auto& w : e.witnesses) wit.push_back(w);
    entries.push_back(Json{{"space", to_string(e.space)},
                           {"description", e.description},
                           {"variants", e.variants},
                           {"witnesses", wit},
                           {"witness_points", points_json(witness_points(e.space))}});
  }
  r.traces.push_back(Json{{"label", "catalog"}, {"levels", entries}});
  r.check("catalog nonempty", !entries.empty());
  return r;
}

Report compare_experiment(SpaceId space, const std::string& variant, const CatalogPoint& x,
                          const CatalogPoint& y, std::uint64_t depth,
                          const SimulatedUltrafilter& u) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  Report r;
  r.experiment = "compare";
  r.inputs = Json{{"space", to_string(space)}, {"variant", variant},       {"x", x.str()},
                  {"y", y.str()},              {"depth", depth},           {"tower", to_json(u)}};
  const auto seq = family(space, variant);
  const auto cmp = chain_order_compare(seq, x, y, u, depth);
  r.traces.push_back(Json{{"label", x.str() + " vs " + y.str()}, {"levels", trace_json(cmp.trace)}});
  r.verdicts.push_back(to_json(cmp.verdict));
  r.check("verdict decided", cmp.verdict.decided(), to_string(cmp.verdict.kind));
  if (cmp.verdict.kind == VerdictKind::Stabilized && cmp.verdict.threshold) {
    bool ok = true;
    for (const auto& rec : cmp.trace) {
      if (rec.level < *cmp.verdict.threshold) continue;
      const bool expect_le = *cmp.verdict.relation != Relation::GT;
      const bool expect_ge = *cmp.verdict.relation != Relation::LT;
      ok = ok && has_le(rec.relation) == expect_le && has_ge(rec.relation) == expect_ge;
    }
    r.check("trace constant from threshold", ok,
            "threshold " + std::to_string(*cmp.verdict.threshold));
  }
  return r;
}

Report compare_threads_experiment(const ThreadPoint& x, const ThreadPoint& y, std::uint64_t depth,
                                  const SimulatedUltrafilter& u) {
  Report r;
  r.experiment = "compare";
  r.inputs = Json{{"space", "knaster"}, {"x", to_json(x)}, {"y", to_json(y)},
                  {"depth", depth},     {"tower", to_json(u)}};
  const auto v = inverse_limit_order(x, y, u, depth);
  const auto sys = InverseSystem::tent();
  Json rows = Json::array();
  bool agree = true;
  const auto cx = x.coordinates(depth), cy = y.coordinates(depth);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const auto e = canonical_interval_chain(pullback_link_count(*sys, n));
    const auto d = pullback_chain(sys, n, e);
    const IndexRange ix = d.index(x), iy = d.index(y);
    const LevelRecord rec{n, d.k, d.mesh_bound, ix, iy, level_relation(ix, iy)};
    Json row = to_json(rec);
    row["x_n"] = to_json(cx[n]);
    row["y_n"] = to_json(cy[n]);
    rows.push_back(row);
    if ((cx[n] - cy[n]).abs() > e.mesh()) {
      const auto dir = strict_direction(rec.relation);
      agree = agree && dir && *dir == (cx[n] < cy[n] ? Relation::LT : Relation::GT);
    }
  }
  r.traces.push_back(Json{{"label", "pullback chains"}, {"levels", rows}});
  r.verdicts.push_back(to_json(v));
  r.check("pullback directions match coordinates", agree);
  r.check("verdict decided", v.decided(), to_string(v.kind));
  return r;
}

Report orders_count_experiment(SpaceId space, std::uint64_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  Report r;
  r.experiment = "orders-count";
  const auto pts = witness_points(space);
  const auto u = SimulatedUltrafilter::parse("r2=0");
  r.inputs = Json{{"space", to_string(space)}, {"depth", depth}, {"points", points_json(pts)}};
  std::set<std::vector<std::size_t>> distinct;
  bool all_total = true;
  std::set<int> patterns;
  for (const auto& var : counted_variants(space)) {
    const auto po = order_on(family(space, var), pts, u, depth);
    Json entry{{"variant", var}};
    if (po.order) {
      distinct.insert(po.order->rank());
      entry["rank"] = po.order->rank();
      // points listed from smallest to largest
      std::vector<std::string> sorted(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) sorted[po.order->rank()[i]] = pts[i].str();
      entry["order"] = sorted;
    } else {
      all_total = false;
      entry["rank"] = nullptr;
    }
    if (space == SpaceId::S2 && po.order) {
      const int p = s2_pattern(*po.verdicts[0][1].relation, *po.verdicts[2][3].relation);
      patterns.insert(p);
      entry["pattern"] = p;
    }
    r.verdicts.push_back(entry);
  }
  r.check("every family orders the witnesses totally", all_total);
  std::size_t expected = 0;
  switch (space) {
    case SpaceId::Arc: expected = 2; break;
    case SpaceId::S1: expected = 4; break;
    case SpaceId::S2: expected = 2; break;
    case SpaceId::S3: expected = 64; break;
    case SpaceId::T: expected = 2; break;
  }
  r.inputs["variants"] = counted_variants(space).size();
  r.check("distinct orders", distinct.size() == expected,
          std::to_string(distinct.size()) + " found, " + std::to_string(expected) + " expected");
  if (space == SpaceId::S2)
    r.check("only patterns 1 and 4", patterns == std::set<int>{1, 4});
  return r;
}

Report knaster_experiment(const EventuallyPeriodicSet& a, std::uint64_t depth,
                          const SimulatedUltrafilter& u1, const SimulatedUltrafilter& u2) {
  Report r;
  r.experiment = "knaster-witness";
  r.inputs = Json{{"set", to_json(a)}, {"depth", depth}, {"u1", to_json(u1)}, {"u2", to_json(u2)}};
  const auto d = demonstrate_distinct_orders(a, depth, u1, u2);
  const auto xs = d.pair.x.coordinates(depth), ys = d.pair.y.coordinates(depth);
  Json rows = Json::array();
  for (std::uint64_t i = 0; i <= depth; ++i)
    rows.push_back(Json{{"level", i},
                        {"x", to_json(xs[i])},
                        {"y", to_json(ys[i])},
                        {"relation", to_string(d.trace[i])},
                        {"in_set", a.contains(i)}});
  r.traces.push_back(Json{{"label", "witness pair"}, {"levels", rows}});
  r.inputs["x"] = to_json(d.pair.x);
  r.inputs["y"] = to_json(d.pair.y);
  Json v1 = to_json(d.under_u1), v2 = to_json(d.under_u2);
  v1["tower"] = "u1";
  v2["tower"] = "u2";
  r.verdicts.push_back(v1);
  r.verdicts.push_back(v2);
  r.check("thread consistency", d.check.consistent);
  r.check("dyadic denominators", d.check.dyadic);
  r.check("x_i > y_i iff i in A", d.check.pattern);
  r.check("opposite verdicts", d.opposite);
  if (d.pair.degenerate) r.check("A infinite and co-infinite", false);
  const std::uint64_t bd = std::min<std::uint64_t>(depth, 6);
  const auto bf = brute_force_oracle(a, bd);
  r.check("brute-force oracle finds the pair", bf.constructed_found,
          std::to_string(bf.realizing_pairs) + " realizing pairs at depth " + std::to_string(bd));
  return r;
}

Report decompose_experiment(std::uint64_t n, const BinaryWord& s, std::uint64_t depth) {
  Report r;
  r.experiment = "orientation-decompose";
  r.inputs = Json{{"n", n}, {"prefix", to_string(s)}, {"depth", depth}};
  const auto c = decompose_on_cylinder(n, s);
  r.verdicts.push_back(Json{{"composition", c}, {"parity", to_string(composition_parity(c))}});
  r.check("odd length", composition_parity(c) == Parity::Odd);
  r.check("agrees with s_n on the cylinder", agrees_with_flip(c, n, s, depth),
          std::to_string(1ULL << (depth - n)) + " words");
  return r;
}

Report reach_experiment(const BinaryWord& s, const BinaryWord& target, Parity parity,
                        std::uint64_t depth) {
  Report r;
  r.experiment = "orientation-reach";
  r.inputs = Json{{"from", to_string(s)},
                  {"to", to_string(target)},
                  {"parity", to_string(parity)},
                  {"depth", depth}};
  const auto results = reach_with_parity(s, target, parity, depth);
  bool ok = true;
  for (const auto& res : results) {
    const bool verified = composition_parity(res.composition) == parity &&
                          maps_cylinder_onto(res.composition, res.source, res.image, depth);
    ok = ok && verified;
    r.verdicts.push_back(Json{{"composition", res.composition},
                              {"parity", to_string(composition_parity(res.composition))},
                              {"source", to_string(res.source)},
                              {"image", to_string(res.image)},
                              {"verified", verified}});
  }
  r.check("parity and cylinder images verified", ok,
          std::to_string(results.size()) + " composition(s)");
  return r;
}

}  // namespace chainorder
