#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chainorder/knaster.hpp"

using namespace chainorder;
using ES = EventuallyPeriodicSet;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

}  // namespace

// Oracle values computed independently with exact fractions and frozen here.
TEST_CASE("coordinates for the evens") {
  const auto [x, y] = witness_coordinates(ES::evens(), 6);
  CHECK(x == rats({"1/2", "1/4", "7/8", "7/16", "25/32", "25/64", "103/128"}));
  CHECK(y == rats({"1/2", "3/4", "3/8", "13/16", "13/32", "51/64", "51/128"}));
  const auto w = build_witness(ES::evens(), 6);
  CHECK(w.x.coordinates(6) == x);
  CHECK(w.y.coordinates(6) == y);
  CHECK_FALSE(w.degenerate);
}

TEST_CASE("coordinates for {1} and the odds") {
  const auto [x1, y1] = witness_coordinates(ES::finite({1}), 3);
  CHECK(x1 == rats({"1/2", "3/4", "3/8", "3/16"}));
  CHECK(y1 == rats({"1/2", "1/4", "7/8", "7/16"}));
  CHECK(build_witness(ES::finite({1}), 3).degenerate);
  const auto [xo, yo] = witness_coordinates(ES::odds(), 4);
  CHECK(xo == rats({"1/2", "3/4", "3/8", "13/16", "13/32"}));
  CHECK(yo == rats({"1/2", "1/4", "7/8", "7/16", "25/32"}));
}

TEST_CASE("depth must be positive") {
  CHECK_THROWS_AS(build_witness(ES::evens(), 0), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_oracle(ES::evens(), 11), std::invalid_argument);
}

TEST_CASE("witness properties on random sets") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<bool> prefix(rng() % 6), pattern(1 + rng() % 5);
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = rng() & 1;
    for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = rng() & 1;
    const ES a(prefix, pattern);
    const std::uint64_t depth = 1 + rng() % 20;
    const auto w = build_witness(a, depth);
    const auto c = check_witness(w);
    INFO(a.bits(), " depth ", depth);
    CHECK(c.consistent);
    CHECK(c.dyadic);
    CHECK(c.pattern);
    for (auto i : c.gt_levels) CHECK(a.contains(i));
    // the periodic threads keep the pattern past the requested depth
    const auto trace = level_trace(w.x, w.y, depth + 12);
    for (std::uint64_t i = 1; i <= depth + 12; ++i)
      CHECK((trace[i] == Relation::GT) == a.contains(i));
  }
}

TEST_CASE("certificate matches the order sets") {
  for (const auto& a : {ES::evens(), ES::odds(), ES::residue_class(3, 1), ES::finite({2, 5})}) {
    const auto w = build_witness(a, 4);
    const auto cert = witness_certificate(a);
    CHECK(cert.le == a.complement().with(0, true));
    CHECK(cert.ge == a.with(0, true));
    const auto exact = exact_order_sets(w.x, w.y);
    REQUIRE(exact);
    CHECK(exact->le == cert.le);
    CHECK(exact->ge == cert.ge);
  }
}

TEST_CASE("two ultrafilters give opposite orders") {
  const auto u1 = SimulatedUltrafilter::parse("r2=0"), u2 = SimulatedUltrafilter::parse("r2=1");
  const auto d = demonstrate_distinct_orders(ES::evens(), 8, u1, u2);
  CHECK(d.opposite);
  CHECK(d.under_u1.relation == Relation::GT);
  CHECK(d.under_u2.relation == Relation::LT);
  const auto m = demonstrate_distinct_orders(ES::odds(), 8, u2, u1);
  CHECK(m.opposite);
  CHECK(m.under_u1.relation == Relation::GT);
  CHECK(m.under_u2.relation == Relation::LT);
  CHECK_THROWS_AS(demonstrate_distinct_orders(ES::odds(), 8, u1, u2), std::invalid_argument);
  CHECK_THROWS_AS(demonstrate_distinct_orders(ES::cofinite_from(3), 8, u1, u2),
                  std::invalid_argument);
}

TEST_CASE("brute force agrees with the construction") {
  const auto r4 = brute_force_oracle(ES::evens(), 4);
  CHECK(r4.realizing_pairs == 16);
  CHECK(r4.constructed_found);
  const auto r6 = brute_force_oracle(ES::evens(), 6);
  CHECK(r6.realizing_pairs == 64);
  CHECK(r6.constructed_found);
  for (const auto& a : {ES::odds(), ES::finite({1}), ES::empty()})
    CHECK(brute_force_oracle(a, 5).constructed_found);
}
