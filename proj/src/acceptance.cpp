#include "chainorder/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chainorder/catalog.hpp"
#include "chainorder/chains.hpp"
#include "chainorder/experiments.hpp"
#include "chainorder/knaster.hpp"
#include "chainorder/orientation.hpp"
#include "chainorder/ultrafilter.hpp"

namespace chainorder {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "FAILED: " << what << "; ";
    passed = passed && ok;
  }
};

const SimulatedUltrafilter& tower0() {
  static const auto u = SimulatedUltrafilter::parse("r2=0");
  return u;
}

// 1. Two orders on the arc, stabilizing where the mesh drops below d/2.
void arc_count(Outcome& o, std::uint64_t) {
  const auto pts = sample_points(SpaceId::Arc);
  std::set<std::vector<std::size_t>> orders;
  std::size_t pairs = 0;
  for (const auto& var : variants(SpaceId::Arc)) {
    const auto seq = family(SpaceId::Arc, var);
    std::vector<std::vector<bool>> le(pts.size(), std::vector<bool>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const auto c = chain_order_compare(seq, pts[i], pts[j], tower0(), 20);
        o.require(c.verdict.kind == VerdictKind::Stabilized, "arc verdict stabilized");
        if (!c.verdict.decided()) return;
        le[i][j] = *c.verdict.relation != Relation::GT;
        if (i == j) continue;
        ++pairs;
        const Rational half_d = (pts[i].param - pts[j].param).abs() / Rational(2);
        std::uint64_t first = 1;
        while (!(seq.level(first).mesh_bound < half_d)) ++first;
        o.require(c.verdict.threshold == first,
                  "threshold of " + pts[i].str() + ", " + pts[j].str() + " is the first level with mesh < d/2");
        for (const auto& rec : c.trace)
          if (rec.level >= first)
            o.require(strict_direction(rec.relation) == c.verdict.relation,
                      "constant direction past the threshold");
      }
    }
    orders.insert(FiniteOrder::from_relation(le).rank());
  }
  o.require(orders.size() == 2, "exactly two orders");
  o.detail << orders.size() << " distinct orders over " << pairs << " ordered pairs, depth 20";
}

// 2. S1: four families, four orders, eight inequalities.
void s1_count(Outcome& o, std::uint64_t) {
  const auto pts = witness_points(SpaceId::S1);  // (0,1), (0,-1), sine 7, sine 3
  const std::map<std::string, std::pair<Relation, Relation>> expected{
      {"D", {Relation::LT, Relation::GT}},
      {"D'", {Relation::GT, Relation::GT}},
      {"E", {Relation::GT, Relation::LT}},
      {"E'", {Relation::LT, Relation::LT}}};
  std::set<std::vector<std::size_t>> orders;
  int inequalities = 0;
  for (const auto& [var, want] : expected) {
    const auto po = order_on(family(SpaceId::S1, var), pts, tower0(), 20);
    o.require(po.order.has_value(), var + " orders the quadruple");
    if (!po.order) return;
    orders.insert(po.order->rank());
    const bool a = po.verdicts[0][1].relation == want.first;
    const bool b = po.verdicts[2][3].relation == want.second;
    o.require(a, var + ": limit:1 vs limit:-1");
    o.require(b, var + ": sine:7 vs sine:3");
    inequalities += a + b;
    for (int p : {0, 2})
      o.require(po.verdicts[p][p + 1].kind == VerdictKind::Stabilized, var + " witness stabilized");
  }
  o.require(orders.size() == 4, "four distinct orders");
  o.detail << orders.size() << " distinct orders, " << inequalities << "/8 inequalities";
}

// 3. S2: only patterns 1 and 4, per level and in the limit.
void s2_patterns(Outcome& o, std::uint64_t) {
  std::set<int> arrangement_patterns;
  for (const auto& a : s2_admissible_arrangements()) arrangement_patterns.insert(a.pattern);
  o.require(arrangement_patterns == std::set<int>{1, 4}, "admissible arrangements give patterns 1, 4");
  const auto pts = witness_points(SpaceId::S2);
  std::set<int> seen;
  std::size_t levels = 0;
  for (const auto& var : variants(SpaceId::S2)) {
    const auto seq = family(SpaceId::S2, var);
    const auto left = chain_order_compare(seq, pts[0], pts[1], tower0(), 20);
    const auto sine = chain_order_compare(seq, pts[2], pts[3], tower0(), 20);
    o.require(left.verdict.decided() && sine.verdict.decided(), var + " witnesses decided");
    if (!left.verdict.decided() || !sine.verdict.decided()) return;
    seen.insert(s2_pattern(*left.verdict.relation, *sine.verdict.relation));
    for (std::size_t n = 0; n < left.trace.size(); ++n) {
      const auto a = strict_direction(left.trace[n].relation);
      const auto b = strict_direction(sine.trace[n].relation);
      if (!a || !b) continue;
      ++levels;
      const int p = s2_pattern(*a, *b);
      seen.insert(p);
      o.require(p == 1 || p == 4, var + " level pattern");
    }
  }
  o.require(seen == std::set<int>{1, 4}, "patterns realized are exactly 1 and 4");
  o.detail << s2_admissible_arrangements().size() << " admissible arrangements; " << levels
           << " strict levels checked";
}

// 4. S3: 64 prefixes, 64 orders on the I_i endpoint pairs.
void s3_distinct(Outcome& o, std::uint64_t) {
  constexpr std::uint64_t depth = 8;
  const auto variants6 = counted_variants(SpaceId::S3);
  // per prefix: verdicts and level relations of (I_i:0, I_i:1/i), i = 1..6
  std::vector<std::vector<Relation>> verdicts(64);
  std::vector<std::vector<std::vector<LevelRelation>>> levels(64);
  for (std::size_t w = 0; w < 64; ++w) {
    const auto seq = family(SpaceId::S3, variants6[w]);
    for (std::int64_t i = 1; i <= 6; ++i) {
      const auto c = chain_order_compare(seq, CatalogPoint::interval(i, 0),
                                         CatalogPoint::interval(i, Rational(1, i)), tower0(), depth);
      o.require(c.verdict.kind == VerdictKind::Stabilized, "I_i pair stabilized");
      if (!c.verdict.decided()) return;
      verdicts[w].push_back(*c.verdict.relation);
      o.require(*c.verdict.relation == (variants6[w][i - 1] == '0' ? Relation::LT : Relation::GT),
                "direction follows bit i");
      std::vector<LevelRelation> rel;
      for (const auto& rec : c.trace) rel.push_back(rec.relation);
      levels[w].push_back(rel);
    }
  }
  std::set<std::vector<Relation>> distinct(verdicts.begin(), verdicts.end());
  o.require(distinct.size() == 64, "64 pairwise-distinct orders");
  std::size_t checks = 0;
  for (std::size_t a = 0; a < 64; ++a)
    for (std::size_t b = a + 1; b < 64; ++b)
      for (std::size_t i = 1; i <= 6; ++i) {
        if (variants6[a][i - 1] == variants6[b][i - 1]) continue;
        for (std::size_t n = i; n <= depth; ++n) {
          ++checks;
          const auto ra = levels[a][i - 1][n - 1], rb = levels[b][i - 1][n - 1];
          o.require(strict_direction(ra) && strict_direction(rb) && ra != rb,
                    "prefixes differing at i disagree at every level >= i");
        }
      }
  o.detail << distinct.size() << " distinct orders; " << checks << " level disagreements checked";
}

// 5. T: two component orders, and no mixing across components.
void t_components(Outcome& o, std::uint64_t) {
  const auto reps = witness_points(SpaceId::T);  // limit:0 (T1), sine:5 (T2), t3:1/2 (T3)
  const std::map<std::string, std::vector<std::size_t>> expected{
      {"D", {1, 2, 0}},   // T3 < T1 < T2
      {"E", {0, 1, 2}}};  // T1 < T2 < T3
  for (const auto& [var, rank] : expected) {
    const auto po = order_on(family(SpaceId::T, var), reps, tower0(), 20);
    o.require(po.order && po.order->rank() == rank, var + " component order");
  }
  const auto pts = sample_points(SpaceId::T);
  std::size_t triples = 0, levels = 0;
  for (const auto& var : variants(SpaceId::T)) {
    const auto seq = family(SpaceId::T, var);
    const auto po = order_on(seq, pts, tower0(), 20);
    o.require(po.order.has_value(), var + " orders the sample");
    if (!po.order) return;
    for (std::size_t x = 0; x < pts.size(); ++x)
      for (std::size_t y = x + 1; y < pts.size(); ++y) {
        if (component_of(SpaceId::T, pts[x]) != component_of(SpaceId::T, pts[y])) continue;
        for (std::size_t z = 0; z < pts.size(); ++z) {
          if (component_of(SpaceId::T, pts[z]) == component_of(SpaceId::T, pts[x])) continue;
          ++triples;
          const auto& rk = po.order->rank();
          const bool between = (rk[x] < rk[z] && rk[z] < rk[y]) || (rk[y] < rk[z] && rk[z] < rk[x]);
          o.require(!between, var + ": " + pts[z].str() + " between " + pts[x].str() + " and " +
                                  pts[y].str());
          const auto sep = separation_data(SpaceId::T, pts[x], pts[y], pts[z]);
          const auto bc = never_between_after(seq, pts[x], pts[y], pts[z], sep.threshold_mesh, 40);
          levels += bc.levels_checked;
          o.require(bc.holds, var + ": level-wise non-mixing");
        }
      }
  }
  o.detail << "2 component orders; " << triples << " cross-component triples, " << levels
           << " level checks past the separation threshold";
}

// 6. Knaster witness pair for the evens.
void knaster_witness(Outcome& o, std::uint64_t) {
  const auto a = EventuallyPeriodicSet::evens();
  const auto d = demonstrate_distinct_orders(a, 16, SimulatedUltrafilter::parse("r2=0"),
                                             SimulatedUltrafilter::parse("r2=1"));
  o.require(d.check.consistent, "thread consistency");
  o.require(d.check.dyadic, "denominators 2^(i+1)");
  o.require(d.check.pattern, "x_i > y_i iff i even");
  o.require(d.under_u1.kind == VerdictKind::UltrafilterDependent &&
                d.under_u1.relation == Relation::GT,
            "GT under r2=0");
  o.require(d.under_u2.kind == VerdictKind::UltrafilterDependent &&
                d.under_u2.relation == Relation::LT,
            "LT under r2=1");
  const auto bf = brute_force_oracle(a, 6);
  o.require(bf.constructed_found, "brute-force oracle contains the pair");
  o.detail << "16 levels; GT vs LT; depth-6 oracle: " << bf.realizing_pairs << " realizing pairs";
}

// 7. Pullback chains against coordinate order on the tent system.
void transfer_bridge(Outcome& o, std::uint64_t seed) {
  constexpr std::uint64_t depth = 20;
  const auto sys = InverseSystem::tent();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ThreadPoint, ThreadPoint>> pairs;
  std::uniform_int_distribution<long> num(0, 64);
  std::bernoulli_distribution bit(0.5);
  const auto random_thread = [&] {
    std::vector<bool> w(depth);
    for (std::size_t i = 0; i < depth; ++i) w[i] = bit(rng);
    return ThreadPoint::word_tail(sys, {Rational(num(rng), 64)}, w);
  };
  for (int i = 0; i < 100; ++i) pairs.emplace_back(random_thread(), random_thread());
  const auto kn = build_witness(EventuallyPeriodicSet::evens(), depth);
  pairs.emplace_back(kn.x, kn.y);

  std::vector<ChainLevel<ThreadPoint>> chains;
  std::vector<Rational> meshes;
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const auto e = canonical_interval_chain(pullback_link_count(*sys, n));
    chains.push_back(pullback_chain(sys, n, e));
    meshes.push_back(e.mesh());
    const Rational gamma = fiber_diameter_bound(*sys, n);
    o.require(gamma <= Rational::power_of_two(-static_cast<long>(n)), "gamma_n <= 2^-n");
    o.require(pullback_mesh_target(*sys, n) == gamma + Rational(1, static_cast<long>(n)),
              "eps_n = gamma_n + 1/n");
    o.require(chains.back().mesh_bound == pullback_mesh_target(*sys, n), "chain mesh bound eps_n");
  }
  std::size_t compared = 0;
  for (const auto& [x, y] : pairs) {
    const auto cx = x.coordinates(depth), cy = y.coordinates(depth);
    for (std::uint64_t n = 1; n <= depth; ++n) {
      if (!((cx[n] - cy[n]).abs() > meshes[n - 1])) continue;
      ++compared;
      const auto dir = strict_direction(level_preorder(chains[n - 1], x, y));
      o.require(dir && *dir == (cx[n] < cy[n] ? Relation::LT : Relation::GT),
                "direction at level " + std::to_string(n));
    }
  }
  o.detail << pairs.size() << " pairs, " << compared << " separated levels agree";
}

// 8. Residue towers satisfy the ultrafilter laws on random sets.
void filter_axioms(Outcome& o, std::uint64_t seed) {
  const std::vector<std::string> towers{"r2=0", "r2=1", "r2=1,r4=3", "pow2:5:19", "fact:4:7",
                                        "r3=2,r6=5"};
  std::mt19937_64 rng(seed);
  std::size_t checks = 0;
  for (const auto& spec : towers) {
    const auto u = SimulatedUltrafilter::parse(spec);
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_periodic_set(rng, 6, 12);
      const auto t = random_periodic_set(rng, 6, 12);
      const auto rep = filter_axiom_check(u, s, t);
      ++checks;
      o.require(rep.all(), spec + " on " + s.bits() + ", " + t.bits());
    }
  }
  o.detail << towers.size() << " towers x 1000 pairs, " << checks << " checks";
}

// 9. Decided verdicts form total orders on every space.
void order_axioms(Outcome& o, std::uint64_t seed) {
  std::size_t triples = 0, decided = 0;
  const auto check_matrix = [&](const std::string& label,
                                const std::vector<std::vector<std::optional<Relation>>>& rel,
                                const std::function<bool(std::size_t, std::size_t)>& same) {
    const std::size_t m = rel.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!rel[i][j]) continue;
        ++decided;
        o.require(rel[j][i] && *rel[j][i] == flip(*rel[i][j]), label + ": totality/symmetry");
        o.require((*rel[i][j] == Relation::EQ) == same(i, j), label + ": antisymmetry");
        for (std::size_t k = 0; k < m; ++k) {
          if (!rel[j][k] || !rel[i][k]) continue;
          ++triples;
          const bool ij = *rel[i][j] != Relation::GT, jk = *rel[j][k] != Relation::GT;
          if (ij && jk) o.require(*rel[i][k] != Relation::GT, label + ": transitivity");
        }
      }
  };
  for (SpaceId space : {SpaceId::Arc, SpaceId::S1, SpaceId::S2, SpaceId::S3, SpaceId::T}) {
    std::vector<std::string> vars =
        space == SpaceId::S3 ? std::vector<std::string>{"000000", "101101", "011010", "111111"}
                             : variants(space);
    const auto pts = sample_points(space);
    for (const auto& var : vars) {
      const auto po = order_on(family(space, var), pts, tower0(), 12);
      std::vector<std::vector<std::optional<Relation>>> rel(pts.size(),
                                                            std::vector<std::optional<Relation>>(pts.size()));
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) rel[i][j] = po.verdicts[i][j].relation;
      check_matrix(to_string(space) + "/" + var, rel,
                   [&](std::size_t i, std::size_t j) { return pts[i] == pts[j]; });
    }
  }
  // Knaster: random eventually periodic threads under two towers
  std::mt19937_64 rng(seed);
  const auto sys = InverseSystem::tent();
  std::vector<ThreadPoint> threads{ThreadPoint::zero(sys)};
  for (int i = 0; i < 14; ++i)
    threads.push_back(ThreadPoint::periodic_tail(sys, {Rational(1, 2)}, random_periodic_set(rng, 3, 4)));
  for (const auto& spec : {"r2=0", "r2=1,r4=3"}) {
    const auto u = SimulatedUltrafilter::parse(spec);
    std::vector<std::vector<std::optional<Relation>>> rel(threads.size(),
                                                          std::vector<std::optional<Relation>>(threads.size()));
    for (std::size_t i = 0; i < threads.size(); ++i)
      for (std::size_t j = 0; j < threads.size(); ++j)
        rel[i][j] = inverse_limit_order(threads[i], threads[j], u, 24).relation;
    // distinct threads differ at some level past the longest preperiod
    const auto same = [&](std::size_t i, std::size_t j) {
      return threads[i].coordinates(40) == threads[j].coordinates(40);
    };
    check_matrix(std::string("knaster/") + spec, rel, same);
  }
  o.detail << decided << " decided pairs, " << triples << " triples";
}

// 10. Decompositions and parity-constrained reachability, exhaustively.
void orientation_combinatorics(Outcome& o, std::uint64_t) {
  constexpr std::uint64_t depth = 10;
  std::size_t decompositions = 0, reaches = 0;
  for (std::uint64_t n = 0; n <= 4; ++n)
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      BinaryWord s;
      for (std::uint64_t b = 0; b < n; ++b) s.push_back((m >> b) & 1);
      const auto c = decompose_on_cylinder(n, s);
      ++decompositions;
      o.require(composition_parity(c) == Parity::Odd, "odd decomposition");
      o.require(agrees_with_flip(c, n, s, depth), "decomposition equals s_n on B_s");
    }
  std::vector<BinaryWord> prefixes;
  for (std::uint64_t len = 0; len <= 3; ++len)
    for (std::uint64_t m = 0; m < (1ULL << len); ++m) {
      BinaryWord w;
      for (std::uint64_t b = 0; b < len; ++b) w.push_back((m >> b) & 1);
      prefixes.push_back(w);
    }
  for (const auto& s : prefixes)
    for (const auto& t : prefixes)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        const auto res = reach_with_parity(s, t, p, depth);
        std::set<BinaryWord> images;
        for (const auto& r : res) {
          ++reaches;
          o.require(composition_parity(r.composition) == p, "requested parity");
          o.require(r.source.size() >= s.size() &&
                        std::equal(s.begin(), s.end(), r.source.begin()),
                    "source inside B_s");
          o.require(maps_cylinder_onto(r.composition, r.source, r.image, depth),
                    "bit-exact cylinder image");
          images.insert(r.image);
        }
        // images partition B_t
        const std::size_t len = std::max(s.size(), t.size());
        o.require(images.size() == (1ULL << (len - t.size())), "images cover B_t");
        for (const auto& img : images)
          o.require(std::equal(t.begin(), t.end(), img.begin()), "image inside B_t");
      }
  o.detail << decompositions << " decompositions on 2^10-word cylinders; " << reaches
           << " reach compositions verified";
}

// 11. equal_or_opposite against a brute-force classification.
void order3_oracle(Outcome& o, std::uint64_t) {
  std::size_t pairs = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& pa : perms)
      for (const auto& pb : perms) {
        const FiniteOrder a(pa), b(pb);
        bool eq = true, opp = true;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            eq = eq && a.less(i, j) == b.less(i, j);
            opp = opp && a.less(i, j) == b.less(j, i);
          }
        const OrderAgreement want =
            eq ? OrderAgreement::Equal : (opp ? OrderAgreement::Opposite : OrderAgreement::Neither);
        const OrderAgreement got = equal_or_opposite(a, b);
        ++pairs;
        o.require(got == want, "classification on " + std::to_string(m) + " elements");
        o.require(triple_hypothesis(a, b) == (got != OrderAgreement::Neither),
                  "triple hypothesis iff equal or opposite");
      }
  }
  o.detail << pairs << " order pairs on <= 5 elements";
}

struct Criterion {
  const char* title;
  double limit;
  void (*run)(Outcome&, std::uint64_t);
};

const Criterion kCriteria[] = {
    {"arc order count", 2, arc_count},
    {"S1 order count", 2, s1_count},
    {"S2 pattern exclusion", 2, s2_patterns},
    {"S3 distinctness", 5, s3_distinct},
    {"T component orderings", 2, t_components},
    {"Knaster witness", 1, knaster_witness},
    {"chain/inverse-limit bridge", 5, transfer_bridge},
    {"ultrafilter surrogate axioms", 2, filter_axioms},
    {"order axioms at scale", 5, order_axioms},
    {"orientation combinatorics", 10, orientation_combinatorics},
    {"equal-or-opposite oracle", 1, order3_oracle},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > 11) throw std::invalid_argument("criterion id must be in 1..11");
  const Criterion& c = kCriteria[id - 1];
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(o, seed);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.limit;
  if (!in_time) o.detail << "over time limit; ";
  return {id, c.title, o.passed && in_time, o.detail.str(), secs, c.limit};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %g s", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title +
         " (" + timing + "): " + r.detail;
}

}  // namespace chainorder
