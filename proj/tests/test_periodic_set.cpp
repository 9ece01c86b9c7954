#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chainorder/periodic_set.hpp"
#include "chainorder/ultrafilter.hpp"

using chainorder::EventuallyPeriodicSet;

TEST_CASE("normal form makes equal sets structurally equal") {
  const EventuallyPeriodicSet a({true, false, true, false}, {true, false, true, false});
  CHECK(a == EventuallyPeriodicSet::evens());
  CHECK(a.bits() == "/10");
  const EventuallyPeriodicSet b({false, true, true}, {true});
  CHECK(b == EventuallyPeriodicSet::cofinite_from(1));
  CHECK(EventuallyPeriodicSet::odds().bits() == "/01");
  CHECK(EventuallyPeriodicSet::finite({0, 3}).bits() == "1001/0");
}

TEST_CASE("membership") {
  const auto s = EventuallyPeriodicSet::residue_class(3, 2);
  for (std::uint64_t n = 0; n < 30; ++n) CHECK(s.contains(n) == (n % 3 == 2));
  const auto c = EventuallyPeriodicSet::cofinite_from(5);
  CHECK_FALSE(c.contains(4));
  CHECK(c.contains(5));
  CHECK(c.contains(1000000));
}

TEST_CASE("boolean operations agree with pointwise evaluation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = chainorder::random_periodic_set(rng, 5, 6);
    const auto t = chainorder::random_periodic_set(rng, 5, 6);
    const auto u = s.unite(t), i = s.intersect(t), c = s.complement();
    const auto sh = s.shifted_down(3);
    for (std::uint64_t n = 0; n < 120; ++n) {
      CHECK(u.contains(n) == (s.contains(n) || t.contains(n)));
      CHECK(i.contains(n) == (s.contains(n) && t.contains(n)));
      CHECK(c.contains(n) == !s.contains(n));
      CHECK(sh.contains(n) == s.contains(n + 3));
    }
    CHECK(i.is_subset_of(s));
    CHECK(s.is_subset_of(u));
    CHECK(EventuallyPeriodicSet::parse_bits(s.bits()) == s);
  }
}

TEST_CASE("finiteness and stabilization") {
  CHECK(EventuallyPeriodicSet::finite({2, 9}).is_finite());
  CHECK(EventuallyPeriodicSet::cofinite_from(4).is_cofinite());
  CHECK(EventuallyPeriodicSet::cofinite_from(4).stable_from() == 4u);
  CHECK(EventuallyPeriodicSet::finite({2, 9}).stable_from() == 10u);
  CHECK_FALSE(EventuallyPeriodicSet::evens().stable_from().has_value());
  CHECK_FALSE(EventuallyPeriodicSet::evens().is_finite());
  CHECK_FALSE(EventuallyPeriodicSet::evens().is_cofinite());
}

TEST_CASE("with and parse errors") {
  CHECK(EventuallyPeriodicSet::evens().with(0, false).contains(0) == false);
  CHECK(EventuallyPeriodicSet::evens().with(0, false).contains(2));
  CHECK(EventuallyPeriodicSet::parse_bits("101") == EventuallyPeriodicSet::finite({0, 2}));
  CHECK_THROWS_AS(EventuallyPeriodicSet::parse_bits("1/"), std::invalid_argument);
  CHECK_THROWS_AS(EventuallyPeriodicSet::parse_bits("12/0"), std::invalid_argument);
  CHECK_THROWS_AS(EventuallyPeriodicSet({}, {}), std::invalid_argument);
}

TEST_CASE("index ranges") {
  CHECK(chainorder::IndexRange(3, 4).contains(4));
  CHECK_THROWS_AS(chainorder::IndexRange(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(chainorder::IndexRange(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(chainorder::IndexRange(3, 2), std::invalid_argument);
}
