#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chainorder/catalog.hpp"
#include "chainorder/experiments.hpp"

using namespace chainorder;
using P = CatalogPoint;

namespace {

const auto kU = SimulatedUltrafilter::parse("r2=0");

Relation verdict(SpaceId s, const std::string& var, const P& x, const P& y) {
  const auto c = chain_order_compare(family(s, var), x, y, kU, 20);
  REQUIRE(c.verdict.decided());
  return *c.verdict.relation;
}

}  // namespace

TEST_CASE("points parse and print") {
  for (const char* t : {"arc:1/4", "sine:7", "limit:-1", "bottom:-1/2", "left:1", "I3:1/3",
                        "A2:5/12", "origin", "t3:1/2"})
    CHECK(P::parse(t).str() == t);
  CHECK_THROWS_AS(P::parse("arc:2"), std::invalid_argument);
  CHECK_THROWS_AS(P::parse("sine:2"), std::invalid_argument);
  CHECK_THROWS_AS(P::parse("A2:1/2"), std::invalid_argument);
  CHECK_THROWS_AS(P::parse("bottom:0"), std::invalid_argument);
  CHECK_THROWS_AS(P::parse("nothing:1"), std::invalid_argument);
  CHECK(parse_space("s2") == SpaceId::S2);
  CHECK_THROWS_AS(parse_space("s4"), std::invalid_argument);
}

TEST_CASE("components") {
  CHECK(component_of(SpaceId::S1, P::limit(1)) == "limit");
  CHECK(component_of(SpaceId::S1, P::sine(3)) == "sine");
  CHECK(component_of(SpaceId::S2, P::bottom(Rational(-1, 2))) == "outer");
  CHECK(component_of(SpaceId::T, P::t3(Rational(1, 3))) == "T3");
  CHECK(component_of(SpaceId::S3, P::oscillation(2, Rational(5, 12))) == "A2");
  CHECK_THROWS_AS(component_of(SpaceId::S1, P::t3(1)), std::invalid_argument);
}

TEST_CASE("arc family") {
  CHECK(arc_chain_family("standard", 3).index(P::arc(0)) == IndexRange(1, 1));
  CHECK(arc_chain_family("reversed", 3).index(P::arc(0)) == IndexRange(8, 8));
  CHECK(arc_chain_family("standard", 3).index(P::arc(Rational(1, 2))) == IndexRange(4, 5));
  CHECK(arc_chain_family("standard", 3).mesh_bound == Rational(3, 16));
  CHECK_THROWS_AS(arc_chain_family("sideways", 3), std::invalid_argument);
  // the two families give opposite orders on a grid
  const auto pts = sample_points(SpaceId::Arc);
  const auto a = order_on(family(SpaceId::Arc, "standard"), pts, kU, 12);
  const auto b = order_on(family(SpaceId::Arc, "reversed"), pts, kU, 12);
  REQUIRE(a.order);
  REQUIRE(b.order);
  CHECK(equal_or_opposite(*a.order, *b.order) == OrderAgreement::Opposite);
}

TEST_CASE("S1 families") {
  // D at n = 2: walk of (4n-2) 2^n = 24 links, then the limit interval top first
  const auto d = s1_chain_family("D", 2);
  CHECK(d.index(P::sine(3)) == IndexRange(1, 1));
  CHECK(d.index(P::limit(1)) == IndexRange(25, 25));
  CHECK(d.index(P::limit(-1)) == IndexRange(d.k, d.k));
  // D' at n = 2: walk of 4n 2^n = 32 links, bottom first
  const auto dp = s1_chain_family("D'", 2);
  CHECK(dp.index(P::limit(-1)) == IndexRange(33, 33));
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto l = s1_chain_family("D", n);
    CHECK(level_preorder(l, P::limit(1), P::limit(-1)) == LevelRelation::LEOnly);
    CHECK(level_preorder(s1_chain_family("E", n), P::limit(1), P::limit(-1)) ==
          LevelRelation::GEOnly);
  }
  CHECK(verdict(SpaceId::S1, "D", P::sine(7), P::sine(3)) == Relation::GT);
  CHECK(verdict(SpaceId::S1, "E", P::sine(7), P::sine(3)) == Relation::LT);
  CHECK(verdict(SpaceId::S1, "D'", P::limit(1), P::limit(-1)) == Relation::GT);
  CHECK(verdict(SpaceId::S1, "E'", P::limit(1), P::limit(-1)) == Relation::LT);
}

TEST_CASE("S2 families and arrangements") {
  CHECK(verdict(SpaceId::S2, "standard", P::left(-1), P::left(1)) == Relation::LT);
  CHECK(verdict(SpaceId::S2, "standard", P::sine(7), P::sine(3)) == Relation::GT);
  CHECK(verdict(SpaceId::S2, "reversed", P::left(-1), P::left(1)) == Relation::GT);
  CHECK(verdict(SpaceId::S2, "reversed", P::sine(7), P::sine(3)) == Relation::LT);
  const auto arr = s2_admissible_arrangements();
  REQUIRE(arr.size() == 2);
  std::set<int> pats;
  for (const auto& a : arr) pats.insert(a.pattern);
  CHECK(pats == std::set<int>{1, 4});
  CHECK(arr[0].order == std::vector<std::string>{"walk", "slab", "bottom", "left"});
  CHECK(s2_pattern(Relation::LT, Relation::GT) == 1);
  CHECK(s2_pattern(Relation::GT, Relation::LT) == 4);
}

TEST_CASE("S3 covering rule") {
  // x = (0,1,1), n = 3
  const auto d = s3_chain_family({false, true, true}, 3);
  CHECK(d.index(P::interval(1, 0)).hi < d.index(P::interval(1, 1)).lo);
  CHECK(d.index(P::interval(2, 0)).lo > d.index(P::interval(2, Rational(1, 2))).hi);
  CHECK(d.index(P::interval(3, 0)).lo > d.index(P::interval(3, Rational(1, 3))).hi);
  CHECK(d.mesh_bound < Rational(1, 3));
  CHECK_THROWS_AS(s3_chain_family({false, true}, 3), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 8; ++n) CHECK(s3_chain_family(std::vector<bool>(8, false), n).mesh_bound < Rational(1, static_cast<long>(n)));
  // prefixes differing at i = 2 disagree at every level >= 2
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const auto a = s3_chain_family({false, false, true, false, true, true}, n);
    const auto b = s3_chain_family({false, true, true, false, true, true}, n);
    const auto x = P::interval(2, 0), y = P::interval(2, Rational(1, 2));
    CHECK(level_preorder(a, x, y) == LevelRelation::LEOnly);
    CHECK(level_preorder(b, x, y) == LevelRelation::GEOnly);
  }
}

TEST_CASE("T component orders") {
  const auto t1 = P::limit(0), t2 = P::sine(5), t3 = P::t3(Rational(1, 2));
  CHECK(verdict(SpaceId::T, "D", t3, t1) == Relation::LT);
  CHECK(verdict(SpaceId::T, "D", t1, t2) == Relation::LT);
  CHECK(verdict(SpaceId::T, "E", t1, t2) == Relation::LT);
  CHECK(verdict(SpaceId::T, "E", t2, t3) == Relation::LT);
}

TEST_CASE("separation data") {
  const auto s = separation_data(SpaceId::Arc, P::arc(0), P::arc(Rational(1, 2)), P::arc(Rational(3, 4)));
  CHECK(s.threshold_mesh == Rational(1, 8));
  CHECK(s.continuum == "arc[0/1,1/2]");
  CHECK_THROWS_AS(separation_data(SpaceId::Arc, P::arc(0), P::arc(1), P::arc(Rational(1, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(separation_data(SpaceId::S1, P::sine(3), P::limit(0), P::sine(5)),
                  std::invalid_argument);
  // 2/(pi s) against the bound 7/(11 s): gap between s = 5 and s = 3 arcs
  const auto t = separation_data(SpaceId::S1, P::sine(3), P::sine(4), P::sine(5));
  CHECK(t.distance_lower == Rational(7, 11) * Rational(1, 20));
  CHECK(t.threshold_mesh > Rational(0));
  const auto l = separation_data(SpaceId::S1, P::limit(-1), P::limit(0), P::sine(6));
  CHECK(l.distance_lower == Rational(7, 66));
  const auto o = separation_data(SpaceId::S2, P::limit(1), P::bottom(Rational(-1, 2)), P::left(1));
  // left:1 is (-1,1); M contains (0,1)
  CHECK(o.distance_lower == Rational(1));
}

TEST_CASE("non-mixing on every space") {
  for (SpaceId space : {SpaceId::Arc, SpaceId::S1, SpaceId::S2, SpaceId::S3, SpaceId::T}) {
    const auto pts = sample_points(space);
    const auto vars = space == SpaceId::S3 ? std::vector<std::string>{"0110"} : variants(space);
    for (const auto& var : vars) {
      const auto seq = family(space, var);
      for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = x + 1; y < pts.size(); ++y) {
          if (component_of(space, pts[x]) != component_of(space, pts[y])) continue;
          for (std::size_t z = 0; z < pts.size(); ++z) {
            if (z == x || z == y) continue;
            SeparationData sep;
            try {
              sep = separation_data(space, pts[x], pts[y], pts[z]);
            } catch (const std::invalid_argument&) {
              continue;  // z on the arc between x and y
            }
            CHECK(never_between_after(seq, pts[x], pts[y], pts[z], sep.threshold_mesh, 24).holds);
          }
        }
    }
  }
}

TEST_CASE("sampled validator") {
  for (SpaceId space : {SpaceId::Arc, SpaceId::S1, SpaceId::S2, SpaceId::S3, SpaceId::T}) {
    const auto vars = space == SpaceId::S3 ? std::vector<std::string>{"011", "100101"} : variants(space);
    for (const auto& var : vars)
      for (std::uint64_t n = 1; n <= 5; ++n) {
        if (space == SpaceId::S3 && n > var.size()) continue;
        const auto rep = validate_level(space, var, n);
        INFO(to_string(space), "/", var, " n=", n, " ", rep.problems.empty() ? "" : rep.problems[0]);
        CHECK(rep.ok);
        CHECK(rep.samples > 0);
      }
  }
}

TEST_CASE("catalog listing") {
  const auto list = catalog_list();
  CHECK(list.size() == 5);
  CHECK(variants(SpaceId::S1) == std::vector<std::string>{"D", "D'", "E", "E'"});
  CHECK(witness_points(SpaceId::S3).size() == 12);
}
