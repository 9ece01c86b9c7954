#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chainorder/ultrafilter.hpp"

using chainorder::EventuallyPeriodicSet;
using chainorder::SimulatedUltrafilter;

TEST_CASE("towers and parsing") {
  const auto u = SimulatedUltrafilter::parse("pow2:3:5");
  CHECK(u.moduli() == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(u.residues() == std::vector<std::uint64_t>{0, 1, 1, 5});
  CHECK(SimulatedUltrafilter::parse("r2=1,r4=3").str() == "r2=1,r4=3");
  CHECK(SimulatedUltrafilter::parse("fact:3:5").moduli() == std::vector<std::uint64_t>{1, 2, 6});
  CHECK_THROWS_AS(SimulatedUltrafilter::parse("r2=1,r4=2"), std::invalid_argument);
  CHECK_THROWS_AS(SimulatedUltrafilter::parse("r3=1,r4=1"), std::invalid_argument);
  CHECK_THROWS_AS(SimulatedUltrafilter::parse("bogus"), std::invalid_argument);
}

TEST_CASE("decisions") {
  const auto u0 = SimulatedUltrafilter::parse("r2=0");
  const auto u1 = SimulatedUltrafilter::parse("r2=1");
  CHECK(u0.decides(EventuallyPeriodicSet::evens()));
  CHECK_FALSE(u1.decides(EventuallyPeriodicSet::evens()));
  CHECK(u1.decides(EventuallyPeriodicSet::odds()));
  CHECK_FALSE(u0.decides(EventuallyPeriodicSet::finite({0, 2, 4})));
  CHECK(u0.decides(EventuallyPeriodicSet::cofinite_from(100)));
  // period 3 forces an extension: 5 + 8N lifted to modulus 24 keeps residue 5
  const auto u = SimulatedUltrafilter::parse("pow2:3:5");
  const auto d = u.decide(EventuallyPeriodicSet::residue_class(3, 2));
  CHECK(d.member);
  CHECK(d.extended);
  CHECK(d.modulus == 24);
  CHECK(u.decide(EventuallyPeriodicSet::residue_class(4, 1)).extended == false);
}

TEST_CASE("filter laws on random pairs") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"r2=0", "r3=1,r9=4", "pow2:4:9"}) {
    const auto u = SimulatedUltrafilter::parse(spec);
    for (int i = 0; i < 300; ++i) {
      const auto s = chainorder::random_periodic_set(rng, 4, 10);
      const auto t = chainorder::random_periodic_set(rng, 4, 10);
      CHECK(chainorder::filter_axiom_check(u, s, t).all());
      CHECK(u.decides(s) != u.decides(s.complement()));
    }
  }
}
