#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

using Int = std::int64_t;

// Checked integer arithmetic. Overflow throws instead of wrapping.
Int add_checked(Int a, Int b);
Int sub_checked(Int a, Int b);
Int mul_checked(Int a, Int b);
Int pow_checked(Int base, unsigned exp);

Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);
bool is_prime(Int n);

struct Weight {
  Int r = 0;
  Int s = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  Weight operator+(const Weight& o) const { return {add_checked(r, o.r), add_checked(s, o.s)}; }
  Weight operator-(const Weight& o) const { return {sub_checked(r, o.r), sub_checked(s, o.s)}; }
  Weight operator-() const { return {sub_checked(0, r), sub_checked(0, s)}; }
  Weight operator*(Int k) const { return {mul_checked(r, k), mul_checked(s, k)}; }

  Int norm() const;  // max(|r|,|s|)
  bool dominant() const { return r >= 0 && s >= 0; }
  std::string str() const;
};

inline constexpr Weight kRho{1, 1};
inline constexpr Weight kAlpha{2, -1};
inline constexpr Weight kBeta{-1, 2};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(w.r) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(w.s) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

Int wht(const Weight& w);

// Roots with their coroot pairings: <(r,s), gamma^v> = cr*r + cs*s.
struct Root {
  Weight root;
  Int cr;
  Int cs;
  const char* name;
};
const std::array<Root, 6>& roots();
Int pairing(const Weight& w, const Root& g);

enum class WeylElement { e, sa, sb, sasb, sbsa, w0 };

const std::array<WeylElement, 6>& weyl_group();
int det(WeylElement w);
const char* name(WeylElement w);
Weight act(WeylElement w, const Weight& v);  // linear action
Weight dot_action(WeylElement w, const Weight& v);
WeylElement compose(WeylElement a, WeylElement b);  // a after b
WeylElement inverse(WeylElement w);

struct DominantRep {
  WeylElement w;
  Weight mu;
  int sign;
};
std::optional<DominantRep> dominant_representative(const Weight& w);

enum class Regularity { Regular, Subregular, Steinberg };
const char* name(Regularity c);

struct RegularityClass {
  Regularity kind;
  std::vector<Weight> phi;  // roots with <lambda+rho, gamma^v> in pZ
};
RegularityClass regularity_class(const Weight& w, Int p);

// lambda in W_p . 0, the affine Weyl group being W with translations by p times the root lattice.
bool linked_to_zero(const Weight& w, Int p);

struct PAdicExpansion {
  Int p = 0;
  std::vector<Weight> digits;  // digits[i] multiplies p^i
  Weight tail;                 // on the fundamental line r+s = -1
  std::size_t k() const { return digits.size(); }
  Weight reassemble() const;
  Weight low_part() const;  // sum of p^i digits[i]
};

struct ExpansionError : std::domain_error {
  using std::domain_error::domain_error;
};

PAdicExpansion p_adic_expand(const Weight& w, Int p, bool normalize);

Weight parse_weight(const std::string& text);

}  // namespace sl3
