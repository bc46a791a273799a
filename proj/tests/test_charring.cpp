#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl3/charring.hpp"

using namespace sl3;

namespace {

Character from_map(const std::map<Weight, Int>& m) { return Character::from_terms({m.begin(), m.end()}); }

Character random_character(std::mt19937& rng, int terms, Int spread) {
  std::uniform_int_distribution<Int> coord(-spread, spread), coef(-3, 3);
  std::vector<Character::Term> t;
  for (int k = 0; k < terms; ++k) t.push_back({{coord(rng), coord(rng)}, coef(rng)});
  return Character::from_terms(t);
}

}  // namespace

TEST_CASE("Weyl characters agree with Freudenthal multiplicities") {
  for (Int r = 0; r <= 7; ++r)
    for (Int s = 0; s <= 7; ++s) {
      const Weight w{r, s};
      CHECK(weyl_character(w) == from_map(oracle::freudenthal(w)));
      CHECK(weyl_character(w).dimension() == weyl_dimension(w));
    }
}

TEST_CASE("Weyl characters of non-dominant weights follow the dot action") {
  CHECK(weyl_character({-1, 3}).is_zero());
  CHECK(weyl_character({-2, 1}) == -weyl_character({0, 0}));
  CHECK(weyl_character({-2, -2}) == -weyl_character({0, 0}));
  CHECK(weyl_character({3, -5}).is_zero());
  CHECK(weyl_character({3, -6}) == weyl_character({0, 3}));
}

TEST_CASE("multiplication matches brute-force convolution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Character a = random_character(rng, 12, 6), b = random_character(rng, 9, 20);
    std::map<Weight, Int> acc;
    for (const auto& [u, m] : a.terms())
      for (const auto& [v, n] : b.terms()) acc[u + v] += m * n;
    CHECK(multiply(a, b) == from_map(acc));
    CHECK(multiply(a, b) == multiply(b, a));
  }
}

TEST_CASE("exact division inverts multiplication and rejects remainders") {
  std::mt19937 rng(11);
  const Character den = weyl_character({1, 0});
  for (int trial = 0; trial < 20; ++trial) {
    const Character q = random_character(rng, 10, 8);
    CHECK(exact_divide(multiply(q, den), den) == q);
  }
  CHECK_THROWS_AS(exact_divide(weyl_character({1, 0}), weyl_character({0, 1})), std::domain_error);
  CHECK_THROWS_AS(exact_divide(weyl_character({1, 0}), Character{}), std::domain_error);
}

TEST_CASE("twist, tau and dual are ring maps") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Character a = random_character(rng, 8, 5), b = random_character(rng, 8, 5);
    CHECK(frobenius_twist(multiply(a, b), 5) == multiply(frobenius_twist(a, 5), frobenius_twist(b, 5)));
    CHECK(tau(multiply(a, b)) == multiply(tau(a), tau(b)));
    CHECK(dual(multiply(a, b)) == multiply(dual(a), dual(b)));
    CHECK(dual(dual(a)) == a);
    CHECK(tau(tau(a)) == a);
  }
  CHECK(tau(weyl_character({2, 1})) == weyl_character({1, 2}));
  CHECK(dual(weyl_character({2, 1})) == weyl_character({1, 2}));
}

TEST_CASE("restricted simple characters") {
  for (Int p : {2, 3, 5, 7}) {
    CHECK(simple_dimension(p - 1, p - 1, p) == p * p * p);
    CHECK(simple_character(p - 1, p - 1, p) == weyl_character({p - 1, p - 1}));
    for (Int a = 0; a < p; ++a)
      for (Int b = 0; b < p; ++b) {
        const Character L = simple_character(a, b, p);
        CHECK(L.all_positive());
        CHECK(L.dimension() == simple_dimension(a, b, p));
        CHECK(tau(L) == simple_character(b, a, p));
      }
  }
  // p = 3: L(1,1) is the 7-dimensional quotient of the adjoint module
  CHECK(simple_dimension(1, 1, 3) == 7);
  CHECK_THROWS(simple_character(3, 0, 3));
}

TEST_CASE("orbit sums and JSON round trip") {
  CHECK(orbit_sum({1, 0}).size() == 3);
  CHECK(orbit_sum({1, 1}).size() == 6);
  CHECK(orbit_sum({0, 0}).size() == 1);
  const Character c = weyl_character({2, 3});
  CHECK(character_from_json(to_json(c)) == c);
}
