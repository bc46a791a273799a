#include <doctest.h>

#include "sl3/supportvar.hpp"
#include "sl3/sweep.hpp"

using namespace sl3;

TEST_CASE("support classes of the documented examples") {
  GenericEngine e(5);
  auto sc = support_variety(e, {5, -10}, 1);
  REQUIRE(sc);
  CHECK(sc->kind == SupportKind::NilpotentCone);
  CHECK(sc->dim() == 6);
  CHECK(sc->evidence.psi_order == 0);
  CHECK(sc->evidence.quantum_dim_nonzero);

  auto st = support_variety(e, {4, 4}, 0);
  REQUIRE(st);
  CHECK(st->kind == SupportKind::Zero);
  CHECK(st->dim() == 0);
  CHECK(st->evidence.psi_order == 3);

  CHECK(!support_variety(e, {-1, 0}, 1).has_value());
}

TEST_CASE("subregular H^0 has psi-order 1 or 2 and the subregular class") {
  for (Int p : {3, 5, 7}) {
    GenericEngine e(p);
    for (Int r = 0; r <= 2 * p; ++r)
      for (Int s = 0; s <= 2 * p; ++s) {
        const Weight w{r, s};
        if (regularity_class(w, p).kind != Regularity::Subregular) continue;
        auto sc = support_variety(e, w, 0);
        REQUIRE(sc);
        CHECK(sc->kind == SupportKind::SubregularClosure);
        CHECK(sc->dim() == 4);
        CHECK((sc->evidence.psi_order == 1 || sc->evidence.psi_order == 2));
        CHECK(!sc->evidence.quantum_dim_nonzero);
      }
  }
}

TEST_CASE("complexity bound and projectivity") {
  GenericEngine e(5);
  CHECK(complexity_lower_bound(e, {5, -10}, 1) == 6);
  CHECK(complexity_lower_bound(e, {4, 4}, 0) == 0);
  CHECK(projectivity_test(e, {4, 4}, 0).projective);
  CHECK(!projectivity_test(e, {5, -10}, 2).projective);
  CHECK_THROWS_AS(projectivity_test(e, {-1, 0}, 1), std::domain_error);
  CHECK_THROWS_AS(complexity_lower_bound(e, {-1, 0}, 1), std::domain_error);
  CHECK_THROWS_AS(support_variety(e, {1, 1}, 4), std::invalid_argument);
  GenericEngine e2(2);
  CHECK_THROWS_AS(projectivity_test(e2, {1, 1}, 0), std::invalid_argument);
}

TEST_CASE("support class is constant in i over a box") {
  for (Int p : {3, 5}) {
    GenericEngine e(p);
    for (const Weight& w : box_weights(p * p)) {
      std::optional<SupportKind> k;
      for (int i = 0; i < 4; ++i)
        if (auto sc = support_variety(e, w, i)) {
          if (k) CHECK(*k == sc->kind);
          k = sc->kind;
        }
    }
  }
}

TEST_CASE("JSON shape") {
  GenericEngine e(5);
  const auto j = support_variety(e, {5, -10}, 1)->to_json();
  CHECK(j["class"] == "NilpotentCone");
  CHECK(j["dim"] == 6);
  CHECK(j["evidence"].contains("psi_order"));
  CHECK(j["weight"] == nlohmann::json{5, -10});
}
