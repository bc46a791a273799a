#include <doctest.h>

#include "oracles.hpp"
#include "sl3/identities.hpp"
#include "sl3/sweep.hpp"

using namespace sl3;

TEST_CASE("golden S and T values at p=5") {
  Calculus c(5);
  const auto st = st_values(c, 1, {3, -4});
  CHECK(st.S == 6);
  CHECK(st.T == 7);
}

TEST_CASE("S and T along the fundamental line") {
  for (Int p : {3, 5, 7}) {
    Calculus c(p);
    for (Int x = 0; x <= p - 1; ++x) CHECK(st_values(c, 1, {x, -x - 1}).S == x * (x + 1) / 2);
    for (Int x = 1; x <= 3 * p; ++x) {
      const auto st = st_values(c, 1, {x, -x - 1});
      CHECK(st.T - st.S == 1);
      CHECK(st.S > 0);
    }
  }
}

TEST_CASE("S matches a complex evaluation of the generic dimension") {
  for (Int p : {3, 5}) {
    Calculus c(p);
    for (const Weight& w : box_weights(p))
      for (int i = 0; i < 4; ++i) {
        const auto st = st_values(c, i, w);
        const auto d = oracle::eval_derivative(c.generic_dim(i, w * p), 0, p);
        CHECK(std::abs(d.real() - static_cast<double>(st.S)) < 1e-6);
        CHECK(std::abs(d.imag()) < 1e-6);
      }
  }
}

TEST_CASE("Q3 on the fundamental line and at the p=7 zero") {
  Calculus c(7);
  for (Int x = 1; x <= 6; ++x) CHECK(qr_values(c, 3, 1, {x, -x - 1}).Q == -x * (x + 1) / 2);
  CHECK(qr_values(c, 3, 1, {27, -22}).Q == 0);
  CHECK(qr_values(c, 3, 2, {27, -22}).Q != 0);
  CHECK(qr_values(c, 3, 1, {-22, 27}).Q == 0);
}

TEST_CASE("theta gives S - S0 at fundamental digits") {
  for (Int p : {3, 5}) {
    Calculus c(p);
    for (const Weight& w0 : box_weights(3))
      for (Int a = 0; a <= p - 1; ++a) {
        const Weight w{a + p * w0.r, p - 1 - a + p * w0.s};
        for (int i = 0; i < 4; ++i)
          CHECK(st_values(c, i, w).S - st_values(c, i, w0).S == theta(c, i, w0, a));
      }
  }
}

TEST_CASE("first derivative vanishes iff Q does") {
  Calculus c(5);
  for (const Weight& w : box_weights(3))
    for (int j = 1; j <= 3; ++j)
      for (Int a = 0; a <= 3; ++a) {
        const auto f = h_derivative_closed_forms(c, j, 1, a, w);
        CHECK(f.exact_first.is_zero() == (f.Q == 0));
        CHECK(f.exact_first == f.assembled_first);
        CHECK(f.exact_second == f.assembled_second);
        const Weight lam = subregular_weight(j, a, w, 5);
        const auto z = oracle::eval_derivative(c.generic_dim(1, lam), 1, 5);
        CHECK(std::abs(z - oracle::to_complex(f.exact_first)) < 1e-6);
      }
}

TEST_CASE("verify: digit families at p=5") {
  const auto rep = verify("5.3", 5, 6);
  CHECK(rep.ok());
  CHECK(rep.cases.size() == 14);
  // families needing p >= 7 are empty here
  int empty = 0;
  for (const auto& row : rep.cases) empty += row.tested == 0;
  CHECK(empty == 4);
  const auto rep7 = verify("5.3", 7, 6);
  CHECK(rep7.ok());
  for (const auto& row : rep7.cases) CHECK(row.tested > 0);
  CHECK(verify("st-small-digits", 5, 6).to_json() == rep.to_json() );
}

TEST_CASE("verify: error handling") {
  CHECK_THROWS_AS(verify("no-such-prop", 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify("5.3", 4, 3), std::invalid_argument);
  const auto na = verify("5.3", 2, 3);
  CHECK(!na.applicable);
  CHECK(na.to_json()["applicable"] == false);
}

TEST_CASE("verify: results do not depend on the job count") {
  CHECK(verify("qr-master", 3, 8, 1).to_json() == verify("qr-master", 3, 8, 3).to_json());
}

TEST_CASE("R1 claims fail on r+2s=-2 and hold off it") {
  const auto rep = verify("r1-monotone", 3, 6);
  CHECK(!rep.ok());
  bool on_fail = false;
  for (const auto& row : rep.cases) {
    if (row.name.find("[off") != std::string::npos) CHECK(row.passed == row.tested);
    if (row.name.find("[on") != std::string::npos && row.passed < row.tested) on_fail = true;
  }
  CHECK(on_fail);
  CHECK(rep.counterexamples.size() <= 20);
}

TEST_CASE("q3 zero set at p=7") {
  const auto rep = verify("8.7", 7, 60);
  CHECK(rep.ok());
  const auto zs = rep.to_json()["zero_set"];
  CHECK(zs.size() == 2);
}

TEST_CASE("p2 method eligibility") {
  CharEngine ch(3);
  GenericEngine g(3);
  CHECK_THROWS_AS(p2_method_check(ch, g, {0, 0}, 1), std::invalid_argument);
  for (const Weight& w : box_weights(12))
    if (p2_method_eligible(w, 1, 3)) {
      CHECK(p2_method_check(ch, g, w, 1).ok());
      break;
    }
}

TEST_CASE("report plumbing") {
  VerificationReport r;
  r.prop = "x";
  for (int k = 0; k < 50; ++k) r.record("row", k % 2 == 0, {{"k", k}});
  CHECK(r.cases.front().tested == 50);
  CHECK(r.cases.front().passed == 25);
  CHECK(r.counterexamples.size() == 20);
  CHECK(!r.ok());
  CHECK(r.to_json()["passed"] == false);
}
