#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chainorder/inverse_limit.hpp"

using namespace chainorder;

namespace {

const auto kTent = InverseSystem::tent();

// x_0..x_n obtained from x_n by applying the tent map
std::vector<Rational> stem_from_top(const Rational& top, std::uint64_t n) {
  std::vector<Rational> s(n + 1);
  s[n] = top;
  for (std::uint64_t i = n; i-- > 0;) s[i] = kTent->map(i).eval(s[i + 1]);
  return s;
}

ThreadPoint random_periodic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(0, 16);
  return ThreadPoint::periodic_tail(kTent, {Rational(num(rng), 16)},
                                    random_periodic_set(rng, 4, 4));
}

}  // namespace

TEST_CASE("coordinates") {
  CHECK(ThreadPoint::zero(kTent).coordinate(7) == Rational(0));
  // branch word L, R from 1/2: 1/4, then the larger preimage 7/8
  const auto p = ThreadPoint::word_tail(kTent, {Rational(1, 2)}, {false, true});
  CHECK(p.coordinates(2) == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(7, 8)});
  CHECK(p.max_depth() == 2u);
  CHECK_THROWS_AS(p.coordinate(3), DepthError);
  const auto s = ThreadPoint::from_stem(kTent, {Rational(1), Rational(1, 2)});
  CHECK_THROWS_AS(s.coordinate(2), DepthError);
  CHECK_THROWS_AS(ThreadPoint::from_stem(kTent, {Rational(1, 2), Rational(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ThreadPoint::zero_tail(kTent, {Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("bonding consistency of periodic threads") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_periodic(rng);
    const auto c = p.coordinates(60);
    for (std::uint64_t n = 0; n < 60; ++n) CHECK(kTent->map(n).eval(c[n + 1]) == c[n]);
  }
}

TEST_CASE("level comparison") {
  const auto x = ThreadPoint::word_tail(kTent, {Rational(1, 2)}, {false});
  const auto y = ThreadPoint::word_tail(kTent, {Rational(1, 2)}, {true});
  CHECK(compare_level(x, y, 0) == Relation::EQ);
  CHECK(compare_level(x, y, 1) == Relation::LT);
  CHECK(compare_level(x, x, 1) == Relation::EQ);
}

TEST_CASE("exact order sets match the level trace") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_periodic(rng), y = random_periodic(rng);
    const auto cert = exact_order_sets(x, y);
    REQUIRE(cert.has_value());
    const auto trace = level_trace(x, y, 120);
    for (std::uint64_t n = 0; n <= 120; ++n) {
      CHECK(cert->le.contains(n) == (trace[n] != Relation::GT));
      CHECK(cert->ge.contains(n) == (trace[n] != Relation::LT));
    }
  }
}

TEST_CASE("inverse limit verdicts") {
  const auto u = SimulatedUltrafilter::parse("r2=0");
  const auto zero = ThreadPoint::zero(kTent);
  // always the left preimage from 1/2: coordinates 2^-(n+1) > 0
  const auto left = ThreadPoint::periodic_tail(kTent, {Rational(1, 2)}, EventuallyPeriodicSet::empty());
  const auto v = inverse_limit_order(zero, left, u, 30);
  CHECK(v.kind == VerdictKind::Stabilized);
  CHECK(v.relation == Relation::LT);
  const auto e = inverse_limit_order(left, left, u, 30);
  CHECK(e.kind == VerdictKind::Stabilized);
  CHECK(e.relation == Relation::EQ);

  const auto w1 = ThreadPoint::word_tail(kTent, {Rational(1, 2)}, {false, true, true});
  const auto w2 = ThreadPoint::word_tail(kTent, {Rational(1, 2)}, {true, false, false});
  CHECK(inverse_limit_order(w1, w2, u, 3).kind == VerdictKind::Unknown);
  CHECK_THROWS_AS(inverse_limit_order(w1, w2, u, 4), DepthError);
  const OrderCertificate wrong{EventuallyPeriodicSet::empty(), EventuallyPeriodicSet::all(), 0, "wrong"};
  CHECK_THROWS_AS(inverse_limit_order(w1, w2, u, 3, wrong), std::invalid_argument);
}

TEST_CASE("fiber bounds and Lipschitz weights") {
  CHECK(fiber_diameter_bound(*kTent, 0) == Rational(1));
  CHECK(fiber_diameter_bound(*kTent, 10) == Rational(1, 1024));
  CHECK(fiber_diameter_bound(*kTent, 20) == Rational::power_of_two(-20));
  for (std::uint64_t n = 0; n < 30; ++n)
    CHECK(fiber_diameter_bound(*kTent, n) <= Rational(2) * fiber_diameter_bound(*kTent, n + 1));
  // oracle: C_n = sum_i 2^-i 2^(n-i)
  const std::vector<Rational> c{1, Rational(5, 2), Rational(21, 4), Rational(85, 8), Rational(341, 16)};
  for (std::uint64_t n = 0; n < c.size(); ++n) CHECK(lipschitz_weight(*kTent, n) == c[n]);
}

TEST_CASE("epsilon map modulus") {
  CHECK(epsilon_map_modulus(*kTent, 0, Rational(2)) == Rational(1));
  // oracle: (eps - 2^-n) / C_n
  CHECK(epsilon_map_modulus(*kTent, 1, Rational(3, 2)) == Rational(2, 5));
  CHECK(epsilon_map_modulus(*kTent, 3, Rational(1, 4)) == Rational(1, 85));
  CHECK(epsilon_map_modulus(*kTent, 5, Rational(1, 16)) == Rational(32, 32 * 1365));
  CHECK_THROWS_AS(epsilon_map_modulus(*kTent, 3, Rational(1, 8)), std::invalid_argument);

  // sampled: |x_n - y_n| < delta forces d(x, y) < eps
  std::mt19937_64 rng(9);
  for (std::uint64_t n : {3u, 5u}) {
    const Rational eps = Rational::power_of_two(-static_cast<long>(n)) * Rational(2);
    const Rational delta = epsilon_map_modulus(*kTent, n, eps);
    std::uniform_int_distribution<long> pick(0, 1 << 20);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 5000; ++trial) {
      const Rational xn(pick(rng), 1 << 20);
      Rational yn = xn + delta * Rational(pick(rng), (1 << 20) + 1) * Rational(bit(rng) ? 1 : -1);
      if (yn < Rational(0) || yn > Rational(1)) yn = xn;
      std::vector<bool> wx(30), wy(30);
      for (int i = 0; i < 30; ++i) wx[i] = bit(rng), wy[i] = bit(rng);
      const auto x = ThreadPoint::word_tail(kTent, stem_from_top(xn, n), wx);
      const auto y = ThreadPoint::word_tail(kTent, stem_from_top(yn, n), wy);
      const Rational d = truncated_distance(x, y, n + 30) + Rational::power_of_two(-static_cast<long>(n + 30));
      CHECK(d < eps);
    }
  }
}
