#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl3/gendim.hpp"

using namespace sl3;

namespace {

Character random_character(std::mt19937& rng, int terms, Int spread) {
  std::uniform_int_distribution<Int> coord(-spread, spread), coef(-4, 4);
  std::vector<Character::Term> t;
  for (int k = 0; k < terms; ++k) t.push_back({{coord(rng), coord(rng)}, coef(rng)});
  return Character::from_terms(t);
}

Character random_invariant(std::mt19937& rng) {
  std::uniform_int_distribution<Int> coord(0, 9), coef(-5, 5);
  Character c;
  for (int k = 0; k < 4; ++k) c += coef(rng) * orbit_sum({coord(rng), coord(rng)});
  return c;
}

oracle::cplx eval_at(const LaurentPoly& f, oracle::cplx t) {
  oracle::cplx acc = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    acc += static_cast<double>(f.coeffs()[i]) * std::pow(t, static_cast<double>(f.low() + static_cast<Int>(i)));
  return acc;
}

bool close(oracle::cplx a, oracle::cplx b) { return std::abs(a - b) < 1e-6 * (1 + std::abs(a) + std::abs(b)); }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic agrees with numeric evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> c(-6, 6);
  const oracle::cplx t{0.83, 0.41};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Int> ca(5), cb(4);
    for (auto& x : ca) x = c(rng);
    for (auto& x : cb) x = c(rng);
    const LaurentPoly a = LaurentPoly::from_coeffs(c(rng), ca), b = LaurentPoly::from_coeffs(c(rng), cb);
    CHECK(close(eval_at(a * b, t), eval_at(a, t) * eval_at(b, t)));
    CHECK(close(eval_at(a + b, t), eval_at(a, t) + eval_at(b, t)));
    CHECK(close(eval_at(a.substitute_power(3), t), eval_at(a, std::pow(t, 3.0))));
    CHECK(close(eval_at(a.substitute_power(-1), t), eval_at(a, 1.0 / t)));
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_divide(LaurentPoly::from_coeffs(0, {1, 1}), LaurentPoly::from_coeffs(0, {1, 0, 1})),
                  std::domain_error);
}

TEST_CASE("Weyl's generic dimension formula equals the specialized character") {
  for (Int r = -6; r <= 8; ++r)
    for (Int s = -6; s <= 8; ++s) {
      const LaurentPoly f = weyl_generic_dimension({r, s});
      CHECK(f == specialize_generic(weyl_character({r, s})));
      CHECK(f.eval_at_one() == weyl_character({r, s}).dimension());
    }
  // dim_t L(1,0) = t^-2 + 1 + t^2 from weights (1,0), (-1,1), (0,-1)
  CHECK(weyl_generic_dimension({1, 0}) == LaurentPoly::from_coeffs(-2, {1, 0, 1, 0, 1}));
}

TEST_CASE("generic dimension of products, duals and twists") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Character a = random_character(rng, 7, 6), b = random_character(rng, 7, 6);
    CHECK(specialize_generic(multiply(a, b)) == specialize_generic(a) * specialize_generic(b));
    CHECK(specialize_generic(dual(a)) == specialize_generic(a).substitute_power(-1));
    for (Int p : {2, 3, 5})
      CHECK(specialize_generic(frobenius_twist(a, p)) == specialize_generic(a).substitute_power(p));
  }
}

TEST_CASE("W-invariant characters have f'(1) = 0") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly f = specialize_generic(random_invariant(rng));
    CHECK(derivative_at_one(f, 1) == 0);
  }
  // not true without invariance
  CHECK(derivative_at_one(specialize_generic(Character::monomial({1, 0})), 1) == -2);
}

TEST_CASE("twisted invariant characters have vanishing derivative at zeta") {
  std::mt19937 rng(99);
  for (Int p : {3, 5, 7})
    for (int trial = 0; trial < 10; ++trial) {
      const Character theta = random_invariant(rng);
      const LaurentPoly f = specialize_generic(frobenius_twist(theta, p));
      CHECK(derivative_eval(f, 1, p).is_zero());
      // ev_1 = ev_zeta after twisting
      CHECK(quantum_eval(f, p) == CycloElement::integer(p, mpq_class(static_cast<long>(specialize_generic(theta).eval_at_one()))));
    }
}

TEST_CASE("cyclotomic evaluation agrees with complex arithmetic") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<Int> c(-5, 5);
  for (Int p : {3, 5, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Int> co(9);
      for (auto& x : co) x = c(rng);
      const LaurentPoly f = LaurentPoly::from_coeffs(c(rng) * 3, co);
      CHECK(close(oracle::to_complex(quantum_eval(f, p)), oracle::eval_derivative(f, 0, p)));
      CHECK(close(oracle::to_complex(derivative_eval(f, 1, p)), oracle::eval_derivative(f, 1, p)));
      CHECK(close(oracle::to_complex(derivative_eval(f, 2, p)), oracle::eval_derivative(f, 2, p)));
      const CycloElement z = quantum_eval(f, p);
      if (!z.is_zero()) CHECK(z * z.inverse() == CycloElement::integer(p, 1));
    }
    CHECK(CycloElement::zeta_power(p, p) == CycloElement::integer(p, 1));
    CHECK(quantum_eval(psi_poly(p), p).is_zero());
  }
}

TEST_CASE("psi_p-order") {
  for (Int p : {2, 3, 5, 7}) {
    const LaurentPoly unit = LaurentPoly::from_coeffs(-p, {1}) + LaurentPoly(2);  // t^-p + 2, value 3 at zeta
    LaurentPoly f = unit;
    for (int k = 0; k <= 3; ++k) {
      CHECK(psi_order(f, p) == k);
      f = f * psi_poly(p);
    }
  }
  for (Int p : {3, 5, 7}) {
    CHECK(psi_order(weyl_generic_dimension({p - 1, p - 1}), p) == 3);
    CHECK(quantum_eval(weyl_generic_dimension({0, 0}), p) == CycloElement::integer(p, 1));
    CHECK(quantum_eval(weyl_generic_dimension({p - 2, p - 2}), p) == CycloElement::integer(p, -1));
  }
  // Observed under the t^{-2 wht} normalization: at p = 2 the Steinberg module has order 0.
  CHECK(psi_order(weyl_generic_dimension({1, 1}), 2) == 0);
  CHECK(d_phi_p(2) == 2);
  CHECK(d_phi_p(3) == 0);
  CHECK(d_phi_p(5) == 0);
}
