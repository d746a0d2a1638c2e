#include "doctest.h"

#include <random>

#include "permcensus/errors.hpp"
#include "permcensus/finite_perm.hpp"

using namespace permcensus;

namespace {

// Deterministic random permutation of the pos <= span box on `rays` rays.
FinitePermutation random_perm(std::mt19937& rng, int rays, int span) {
  std::vector<Point> box;
  for (int r = 1; r <= rays; ++r)
    for (int p = 1; p <= span; ++p) box.push_back({r, p});
  std::vector<Point> image = box;
  std::shuffle(image.begin(), image.end(), rng);
  std::map<Point, Point> mapping;
  for (std::size_t i = 0; i < box.size(); ++i) mapping[box[i]] = image[i];
  return FinitePermutation(rays, mapping);
}

}  // namespace

TEST_CASE("identity basics") {
  FinitePermutation id(3);
  CHECK(id.is_identity());
  CHECK(id.ray_count() == 3);
  CHECK(id.apply({2, 5}) == Point{2, 5});
  CHECK(id.order() == 1);
  CHECK(id.parity() == Parity::even);
  CHECK(id.support().empty());
  CHECK(id.cycle_decomposition().empty());
}

TEST_CASE("compose applies left factor first") {
  const Point a{1, 1}, b{1, 2}, c{1, 3};
  FinitePermutation f = FinitePermutation::transposition(1, a, b);
  FinitePermutation g = FinitePermutation::transposition(1, b, c);
  CHECK(compose(f, g).apply(a) == c);
  CHECK(compose(g, f).apply(a) == b);
  CHECK(compose(f, g).apply(c) == b);
}

TEST_CASE("cycle constructors and application") {
  FinitePermutation f = FinitePermutation::from_cycles(2, {{{1, 1}, {1, 2}, {2, 1}}, {{2, 2}, {2, 3}}});
  CHECK(f.apply({1, 1}) == Point{1, 2});
  CHECK(f.apply({1, 2}) == Point{2, 1});
  CHECK(f.apply({2, 1}) == Point{1, 1});
  CHECK(f.apply_inverse({1, 2}) == Point{1, 1});
  CHECK(f.apply({2, 2}) == Point{2, 3});
  CHECK(f.apply({9, 9}) == Point{9, 9});  // outside ambient check happens at construction only
  CHECK(f.order() == 6);
  CHECK(f.support().size() == 5);
}

TEST_CASE("parity") {
  FinitePermutation t = FinitePermutation::transposition(1, {1, 1}, {1, 2});
  FinitePermutation c3 = FinitePermutation::three_cycle(1, {1, 1}, {1, 2}, {1, 3});
  CHECK(t.parity() == Parity::odd);
  CHECK(c3.parity() == Parity::even);
  CHECK(compose(t, c3).parity() == Parity::odd);
  CHECK(combine(Parity::odd, Parity::odd) == Parity::even);
  CHECK(combine(Parity::odd, Parity::even) == Parity::odd);
}

TEST_CASE("cycle decomposition is canonical") {
  FinitePermutation f = FinitePermutation::from_cycles(1, {{{1, 5}, {1, 6}}, {{1, 1}, {1, 3}, {1, 2}}});
  auto cycles = f.cycle_decomposition();
  REQUIRE(cycles.size() == 2);
  // each cycle starts at its smallest point, cycles sorted by that point
  CHECK(cycles[0] == std::vector<Point>{{1, 1}, {1, 3}, {1, 2}});
  CHECK(cycles[1] == std::vector<Point>{{1, 5}, {1, 6}});
}

TEST_CASE("three-cycle decomposition multiplies back") {
  std::mt19937 rng(7);
  int even_seen = 0;
  while (even_seen < 10) {
    FinitePermutation f = random_perm(rng, 2, 4);
    if (f.parity() != Parity::even) continue;
    ++even_seen;
    FinitePermutation acc(2);
    for (const auto& [a, b, c] : f.decompose_into_3cycles()) {
      acc = compose(acc, FinitePermutation::three_cycle(2, a, b, c));
    }
    CHECK(acc == f);
  }
  FinitePermutation odd = FinitePermutation::transposition(1, {1, 1}, {1, 2});
  CHECK_THROWS_AS(odd.decompose_into_3cycles(), ParityError);
}

TEST_CASE("construction validates bijectivity") {
  std::map<Point, Point> bad{{{1, 1}, {1, 2}}, {{1, 3}, {1, 2}}};
  CHECK_THROWS_AS(FinitePermutation(1, bad), std::invalid_argument);
  std::map<Point, Point> unbalanced{{{1, 1}, {1, 2}}};
  CHECK_THROWS_AS(FinitePermutation(1, unbalanced), std::invalid_argument);
  std::map<Point, Point> outside{{{1, 1}, {2, 1}}, {{2, 1}, {1, 1}}};
  CHECK_THROWS_AS(FinitePermutation(1, outside), std::invalid_argument);
  CHECK_THROWS_AS(FinitePermutation::from_cycles(1, {{{1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePermutation::from_cycles(1, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose(FinitePermutation(1), FinitePermutation(2)), AmbientMismatch);
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    FinitePermutation f = random_perm(rng, 2, 5);
    FinitePermutation g = random_perm(rng, 2, 5);
    FinitePermutation h = random_perm(rng, 2, 5);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, f.inverse()).is_identity());
    CHECK(compose(f.inverse(), f).is_identity());
    CHECK(compose(f, g).parity() == combine(f.parity(), g.parity()));
    for (int p = 1; p <= 5; ++p) {
      CHECK(f.apply_inverse(f.apply({1, p})) == Point{1, p});
      CHECK(f.inverse().apply({2, p}) == f.apply_inverse({2, p}));
    }
    // order is the exponent on every point
    FinitePermutation power(2);
    for (std::uint64_t k = 0; k < f.order(); ++k) power = compose(power, f);
    CHECK(power.is_identity());
  }
}
