#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chainorder/pl_map.hpp"

using chainorder::PLMap;
using chainorder::Rational;

TEST_CASE("tent evaluation") {
  const auto f = PLMap::tent();
  CHECK(f.eval(Rational(1, 4)) == Rational(1, 2));
  CHECK(f.eval(Rational(1, 2)) == Rational(1));
  CHECK(f.eval(Rational(7, 8)) == Rational(1, 4));
  CHECK_THROWS_AS(f.eval(Rational(3, 2)), std::domain_error);
  CHECK(f.lipschitz() == Rational(2));
}

TEST_CASE("tent preimages") {
  const auto f = PLMap::tent();
  CHECK(f.preimages(Rational(1, 4)) == std::vector<Rational>{Rational(1, 8), Rational(7, 8)});
  CHECK(f.preimages(Rational(1)) == std::vector<Rational>{Rational(1, 2)});
  CHECK(f.preimages(Rational(2)).empty());
}

TEST_CASE("composition") {
  // oracle: breakpoints 0, 1/4, 1/2, 3/4, 1 with values 0, 1, 0, 1, 0
  const auto g = chainorder::compose(PLMap::tent(), PLMap::tent());
  CHECK(g.breakpoints() ==
        std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
  CHECK(g.values() == std::vector<Rational>{0, 1, 0, 1, 0});
  CHECK(chainorder::compose(PLMap::identity(), PLMap::tent()) == PLMap::tent());
}

TEST_CASE("iterated preimage set") {
  // oracle: tent^-3(1/3) = {1,5,7,11,13,17,19,23}/24
  std::vector<Rational> want;
  for (long p : {1, 5, 7, 11, 13, 17, 19, 23}) want.emplace_back(p, 24);
  CHECK(chainorder::iterated_preimage_set(PLMap::tent(), Rational(1, 3), 3) == want);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(PLMap({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(PLMap({0, Rational(1, 2)}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PLMap({0, 1}, {0, 2}), std::invalid_argument);
  const PLMap flat({0, Rational(1, 2), 1}, {0, Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(flat.preimages(Rational(1, 2)), std::domain_error);
}
