#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "sl3/weights.hpp"

namespace sl3 {

// Element of Z[X(T)]: sorted (weight, multiplicity) pairs, no zero entries.
class Character {
 public:
  using Term = std::pair<Weight, Int>;

  Character() = default;
  static Character monomial(const Weight& w, Int m = 1);
  static Character from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int dimension() const;
  Int multiplicity(const Weight& w) const;
  bool all_positive() const;

  Character operator-() const;
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Int k, const Character& c);
  friend bool operator==(const Character&, const Character&) = default;

 private:
  static Character combine(const Character& a, const Character& b, Int sign);
  std::vector<Term> terms_;
};

Character multiply(const Character& a, const Character& b);
inline Character operator*(const Character& a, const Character& b) { return multiply(a, b); }

Character frobenius_twist(const Character& c, Int p);
Character tau(const Character& c);
Character dual(const Character& c);

// Exact quotient in the group ring; throws std::domain_error if not exact.
Character exact_divide(const Character& num, const Character& den);

Character weyl_character(const Weight& w);
Character simple_character(Int a, Int b, Int p);
Character orbit_sum(const Weight& w);  // sum over the linear W-orbit

// Signed Weyl dimension (r+1)(s+1)(r+s+2)/2, the dimension of weyl_character.
Int weyl_dimension(const Weight& w);
Int simple_dimension(Int a, Int b, Int p);

nlohmann::json to_json(const Character& c);
Character character_from_json(const nlohmann::json& j);

}  // namespace sl3
