#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "chainorder/catalog.hpp"
#include "chainorder/chains.hpp"

using namespace chainorder;

TEST_CASE("level preorder") {
  CHECK(level_relation({2, 2}, {5, 5}) == LevelRelation::LEOnly);
  CHECK(level_relation({3, 3}, {3, 3}) == LevelRelation::Both);
  CHECK(level_relation({3, 4}, {4, 5}) == LevelRelation::Both);
  CHECK(level_relation({5, 6}, {3, 4}) == LevelRelation::GEOnly);
  CHECK(to_string(LevelRelation::LEOnly) == "LE_only");
  CHECK(reverse_range({2, 2}, 10) == IndexRange(9, 9));
  CHECK(reverse_range({2, 3}, 10) == IndexRange(8, 9));
}

TEST_CASE("reversal swaps directions") {
  const auto d = arc_chain_family("standard", 4);
  const auto r = reverse(d);
  const auto rr = reverse(r);
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j <= 16; ++j) {
      const auto x = CatalogPoint::arc(Rational(i, 16)), y = CatalogPoint::arc(Rational(j, 16));
      CHECK(level_preorder(r, x, y) == swap(level_preorder(d, x, y)));
      CHECK(level_preorder(rr, x, y) == level_preorder(d, x, y));
    }
  CHECK(reverse(d).index(CatalogPoint::arc(Rational(1, 32))) == IndexRange(d.k, d.k));
}

TEST_CASE("canonical interval chain") {
  const auto one = canonical_interval_chain(1);
  CHECK(one.index_of(Rational(0)) == IndexRange(1, 1));
  CHECK(one.index_of(Rational(1)) == IndexRange(1, 1));
  const auto c4 = canonical_interval_chain(4);
  CHECK(c4.link(2) == std::pair<Rational, Rational>{Rational(3, 16), Rational(9, 16)});
  CHECK(c4.index_of(Rational(1, 2)) == IndexRange(2, 3));
  CHECK(c4.mesh() == Rational(3, 8));
  CHECK_THROWS_AS(c4.index_of(Rational(5, 4)), std::domain_error);
  // oracle: brute-force membership in the open links
  const std::vector<std::pair<Rational, IndexRange>> member{
      {Rational(0), {1, 1}},      {Rational(1, 8), {1, 1}}, {Rational(3, 16), {1, 1}},
      {Rational(1, 4), {1, 2}},   {Rational(5, 16), {2, 2}}, {Rational(1), {4, 4}}};
  for (const auto& [t, r] : member) CHECK(c4.index_of(t) == r);
}

TEST_CASE("canonical chains are chains covering [0,1]") {
  for (std::int64_t k = 1; k <= 64; ++k) {
    const auto c = canonical_interval_chain(k);
    for (std::int64_t i = 1; i <= k; ++i)
      for (std::int64_t j = 1; j <= k; ++j) {
        const auto [a1, b1] = c.link(i);
        const auto [a2, b2] = c.link(j);
        const bool meet = max(a1, a2) < min(b1, b2);
        CHECK(meet == (std::abs(i - j) <= 1));
      }
    // cover: endpoints of links and midpoints all land in some link
    for (std::int64_t s = 0; s <= 4 * k; ++s) {
      const Rational t(s, 4 * k);
      const auto r = c.index_of(t);
      for (std::int64_t i = r.lo; i <= r.hi; ++i) {
        const auto [a, b] = c.link(i);
        CHECK((a < t && t < b));
      }
    }
  }
}

TEST_CASE("pullback chains") {
  const auto sys = InverseSystem::tent();
  // oracle: smallest k with 3/(2k) < (1/n)/C_n
  const std::vector<std::int64_t> k{4, 16, 48, 128, 320, 768};
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(pullback_link_count(*sys, n) == k[n - 1]);
  CHECK(pullback_mesh_target(*sys, 4) == Rational(1, 16) + Rational(1, 4));
  CHECK_THROWS_AS(pullback_chain(sys, 3, canonical_interval_chain(47)), std::invalid_argument);
  const auto d = pullback_chain(sys, 3, canonical_interval_chain(48));
  CHECK(d.mesh_bound == Rational(1, 8) + Rational(1, 3));
  CHECK(d.index(ThreadPoint::zero(sys)).lo == 1);
  const auto a = ThreadPoint::word_tail(sys, {Rational(1, 2)}, {false, true, false});
  const auto b = ThreadPoint::word_tail(sys, {Rational(1, 2)}, {false, true, false, true});
  CHECK(level_preorder(d, a, b) == LevelRelation::Both);
}

TEST_CASE("chain order on the arc") {
  const auto u = SimulatedUltrafilter::parse("r2=0");
  const auto x = CatalogPoint::arc(Rational(1, 4)), y = CatalogPoint::arc(Rational(3, 4));
  const auto c = chain_order_compare(family(SpaceId::Arc, "standard"), x, y, u, 20);
  CHECK(c.verdict.kind == VerdictKind::Stabilized);
  CHECK(c.verdict.relation == Relation::LT);
  // first n with 3/2^(n+1) < 1/4
  CHECK(c.verdict.threshold == 3u);
  CHECK(c.trace.size() == 20);
  const auto r = chain_order_compare(family(SpaceId::Arc, "reversed"), x, y, u, 20);
  CHECK(r.verdict.relation == Relation::GT);
  CHECK(chain_order_compare(family(SpaceId::Arc, "standard"), x, x, u, 5).verdict.relation ==
        Relation::EQ);
  CHECK_THROWS_AS(chain_order_compare(family(SpaceId::Arc, "standard"), x, y, u, 0),
                  std::invalid_argument);
}

TEST_CASE("never between") {
  const auto seq = family(SpaceId::Arc, "standard");
  const auto x = CatalogPoint::arc(0), y = CatalogPoint::arc(Rational(1, 2)),
             z = CatalogPoint::arc(Rational(3, 4));
  const auto ok = never_between_after(seq, x, y, z, Rational(1, 8), 20);
  CHECK(ok.holds);
  CHECK(ok.levels_checked == 17);  // mesh 3/2^(n+1) < 1/8 from n = 4
  // with no mesh restriction the coarse levels put z between
  const auto bad = never_between_after(seq, x, y, z, Rational(10), 20);
  CHECK_FALSE(bad.holds);
  CHECK(bad.first_failure == 1u);
  CHECK_THROWS_AS(never_between_after(seq, x, y, x, Rational(1), 5), std::invalid_argument);
  const auto s1 = family(SpaceId::S1, "D");
  const auto a = CatalogPoint::sine(3), b = CatalogPoint::sine(5), l = CatalogPoint::limit(0);
  const auto sep = separation_data(SpaceId::S1, a, b, l);
  CHECK(never_between_after(s1, a, b, l, sep.threshold_mesh, 30).holds);
}

TEST_CASE("finite orders") {
  const FiniteOrder id({0, 1, 2}), rev({2, 1, 0}), mixed({1, 0, 2});
  CHECK(equal_or_opposite(id, id) == OrderAgreement::Equal);
  CHECK(equal_or_opposite(id, rev) == OrderAgreement::Opposite);
  CHECK(equal_or_opposite(id, mixed) == OrderAgreement::Neither);
  CHECK_FALSE(triple_hypothesis(id, mixed));
  CHECK(triple_hypothesis(id, rev));
  CHECK(to_string(OrderAgreement::Opposite) == "opposite");
  CHECK_THROWS_AS(FiniteOrder({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(equal_or_opposite(id, FiniteOrder({0, 1})), std::invalid_argument);
  const std::vector<std::vector<bool>> le{{true, false}, {true, true}};
  CHECK(FiniteOrder::from_relation(le).rank() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(FiniteOrder::from_relation({{true, true}, {true, true}}), std::invalid_argument);
}
