#pragma once

#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "sl3/charring.hpp"

namespace sl3 {

// Element of Z[t, t^-1], stored densely from the lowest exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(Int exponent, Int coeff = 1);
  static LaurentPoly from_coeffs(Int low, std::vector<Int> coeffs);

  bool is_zero() const { return c_.empty(); }
  Int low() const { return low_; }
  Int high() const { return low_ + static_cast<Int>(c_.size()) - 1; }
  Int coeff(Int e) const;
  const std::vector<Int>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly substitute_power(Int k) const;  // t -> t^k, k != 0
  LaurentPoly derivative() const;
  Int eval_at_one() const;

 private:
  void trim();
  Int low_ = 0;
  std::vector<Int> c_;
};

// Quotient of a by b in Z[t,t^-1]; throws std::domain_error unless exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly specialize_generic(const Character& c);
LaurentPoly weyl_generic_dimension(const Weight& w);
LaurentPoly psi_poly(Int p);  // 1 + t + ... + t^{p-1}
int psi_order(const LaurentPoly& f, Int p);

// Element of Q[t]/Phi_p(t) in the basis 1, t, ..., t^{p-2}.
class CycloElement {
 public:
  CycloElement() = default;
  explicit CycloElement(Int p);
  static CycloElement integer(Int p, const mpq_class& v);
  static CycloElement zeta_power(Int p, Int k);
  static CycloElement from_exponents(Int p, std::vector<mpq_class> full);

  Int p() const { return p_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;  // lies in Q
  mpq_class rational_value() const;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const mpq_class& k, const CycloElement& a);
  friend bool operator==(const CycloElement& a, const CycloElement& b);
  CycloElement inverse() const;
  friend CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

 private:
  Int p_ = 0;
  std::vector<mpq_class> c_;
};

CycloElement quantum_eval(const LaurentPoly& f, Int p);
CycloElement derivative_eval(const LaurentPoly& f, int order, Int p);
Int derivative_at_one(const LaurentPoly& f, int order);
Int d_phi_p(Int p);

nlohmann::json to_json(const LaurentPoly& f);
nlohmann::json to_json(const CycloElement& z);

}  // namespace sl3
