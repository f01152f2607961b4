#include "doctest.h"

#include <random>

#include "divcodes/catalog.hpp"
#include "divcodes/error.hpp"
#include "divcodes/spreads.hpp"

using namespace divcodes;

namespace {

Subspace sub(std::size_t v, std::vector<Point> gens) { return Subspace(v, gens); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(PartialSpread{4, 2, {}}));
  CHECK(validate(PartialSpread{4, 2, {sub(4, {1, 2}), sub(4, {4, 8})}}));
  CHECK_FALSE(validate(PartialSpread{4, 2, {sub(4, {1, 2}), sub(4, {1, 4})}}));
  CHECK_FALSE(validate(PartialSpread{4, 2, {sub(4, {1})}}));
}

TEST_CASE("full line spread of PG(3,2) has no holes") {
  const PartialSpread s{4, 2, {sub(4, {1, 2}), sub(4, {4, 8}), sub(4, {5, 10}), sub(4, {6, 11}), sub(4, {7, 9})}};
  REQUIRE(validate(s));
  CHECK(holes(s).empty());
  CHECK_THROWS_AS(hole_code(s), PreconditionError);
}

TEST_CASE("maximum partial spreads") {
  struct Case {
    std::size_t v, r, size, holes, k, delta;
  };
  for (const auto& c : {Case{5, 2, 9, 4, 3, 2}, Case{7, 2, 41, 4, 3, 2}, Case{7, 3, 17, 8, 4, 4},
                        Case{9, 2, 169, 4, 3, 2}, Case{10, 3, 145, 8, 4, 4}}) {
    CAPTURE(c.v);
    CAPTURE(c.r);
    const auto s = corollary2_spread(c.v, c.r);
    CHECK(validate(s));
    CHECK(s.members.size() == c.size);
    CHECK(max_size(c.v, c.r) == c.size);
    CHECK(max_size(c.v, c.r) * ((1U << c.r) - 1) + (1U << c.r) == (1U << c.v) - 1);
    const auto h = holes(s);
    CHECK(h.size() == c.holes);
    CHECK(h.size() + s.members.size() * ((1U << c.r) - 1) == (1U << c.v) - 1);
    const auto code = hole_code(s);
    CHECK(code.k() == c.k);
    CHECK(is_divisible(code, c.delta));
    CHECK(prop1_check(s).passed());
  }
  // Four holes forming an affine plane: the even-weight [4,3] code.
  CHECK(hole_code(corollary2_spread(5, 2)) == even_weight(4));
  CHECK_THROWS_AS(corollary2_spread(6, 2), PreconditionError);
  CHECK_THROWS_AS(max_size(8, 3), PreconditionError);
}

TEST_CASE("greedy random extensions satisfy the hole-code assertions") {
  std::mt19937_64 rng(7);
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + trial % 2;
    const std::size_t v = r == 2 ? 6 + trial % 3 : 7 + trial % 2;
    PartialSpread s{v, r, {}};
    greedy_extend(s, rng, 100);
    CAPTURE(v);
    CAPTURE(r);
    REQUIRE(validate(s));
    if (holes(s).empty()) continue;
    const auto rep = prop1_check(s);
    for (const auto& a : rep.assertions) {
      CAPTURE(a.name);
      CHECK(a.passed);
    }
  }
}
