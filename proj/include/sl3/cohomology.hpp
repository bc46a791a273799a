#pragma once

#include <array>
#include <limits>
#include <memory>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "sl3/charring.hpp"
#include "sl3/gendim.hpp"

namespace sl3 {

enum class Bundle { Plain, Alpha, Beta };
const char* name(Bundle b);
Bundle parse_bundle(const std::string& s);

template <class V>
using Table = std::array<V, 4>;

struct EngineError : std::logic_error {
  using std::logic_error::logic_error;
};

// Value rings the recursion can run in. Each is a homomorphic image of
// Z[X(T)] that carries the Frobenius twist, tau and duality.
class CharRing {
 public:
  using Value = Character;
  explicit CharRing(Int p) : p_(p) {}
  Int p() const { return p_; }
  static Value zero() { return {}; }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value scale(Int k, const Value& a) { return k * a; }
  static Value mul(const Value& a, const Value& b) { return multiply(a, b); }
  Value twist(const Value& a) const { return frobenius_twist(a, p_); }
  static Value tau(const Value& a) { return sl3::tau(a); }
  static Value dual(const Value& a) { return sl3::dual(a); }
  Value weyl(const Weight& w) const;
  Value simple(Int a, Int b) const;

 private:
  Int p_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Weight, Character, WeightHash> weyl_cache_;
};

class GenericRing {
 public:
  using Value = LaurentPoly;
  explicit GenericRing(Int p) : p_(p) {}
  Int p() const { return p_; }
  static Value zero() { return {}; }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value scale(Int k, const Value& a) { return LaurentPoly(k) * a; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  Value twist(const Value& a) const { return a.substitute_power(p_); }
  static Value tau(const Value& a) { return a; }
  static Value dual(const Value& a) { return a.substitute_power(-1); }
  static Value weyl(const Weight& w) { return weyl_generic_dimension(w); }
  Value simple(Int a, Int b) const;

 private:
  Int p_;
};

class DimRing {
 public:
  using Value = Int;
  explicit DimRing(Int p) : p_(p) {}
  Int p() const { return p_; }
  static Value zero() { return 0; }
  static bool is_zero(Value v) { return v == 0; }
  static Value add(Value a, Value b) { return add_checked(a, b); }
  static Value scale(Int k, Value a) { return mul_checked(k, a); }
  static Value mul(Value a, Value b) { return mul_checked(a, b); }
  static Value twist(Value a) { return a; }
  static Value tau(Value a) { return a; }
  static Value dual(Value a) { return a; }
  static Value weyl(const Weight& w) { return weyl_dimension(w); }
  Value simple(Int a, Int b) const { return simple_dimension(a, b, p_); }

 private:
  Int p_;
};

struct EngineOptions {
  // Tables for weights with max(|r|,|s|) above this radius are not memoized.
  // Negative disables the cache.
  Int cache_radius = std::numeric_limits<Int>::max();
  // Weights with max(|r|,|s|) at most this use the simple-reflection base case.
  Int small_zone = 4;
  int max_depth = 400;
};

template <class Ring>
class Engine {
 public:
  using Value = typename Ring::Value;
  using T = Table<Value>;

  explicit Engine(Int p, EngineOptions opts = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  Int p() const { return ring_.p(); }
  const Ring& ring() const { return ring_; }
  const EngineOptions& options() const { return opts_; }

  T plain(const Weight& w) { return plain(w, 0); }
  T alpha(const Weight& w) { return alpha(w, 0); }
  T beta(const Weight& w);
  T get(const Weight& w, Bundle b);

  // Forces the digit recursion even where a base case would apply.
  T plain_by_digits(const Weight& w) { return digits_plain(w, 0); }
  // Recursive formula for non-split alpha digit classes, bypassing the split base case.
  std::optional<T> alpha_by_formula(const Weight& w) { return alpha_formula(w, 0); }

  std::size_t cache_size() const;

 private:
  T plain(const Weight& w, int depth);
  T alpha(const Weight& w, int depth);
  T digits_plain(const Weight& w, int depth);
  std::optional<T> alpha_formula(const Weight& w, int depth);
  std::optional<T> reflect(const Weight& w, int direction, int depth);
  T base(const Weight& w) const;
  bool base_applies(const Weight& w) const;

  T coef(const Value& c, const T& t) const;  // c * t^F degreewise
  T beta_at(const Weight& w, int depth);

  struct Key {
    Weight w;
    bool alpha;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return WeightHash{}(k.w) * 2 + k.alpha; }
  };
  std::optional<T> lookup(const Key& k) const;
  void store(const Key& k, const T& t);

  Ring ring_;
  EngineOptions opts_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, T, KeyHash> memo_;
};

extern template class Engine<CharRing>;
extern template class Engine<GenericRing>;
extern template class Engine<DimRing>;

using CharEngine = Engine<CharRing>;
using GenericEngine = Engine<GenericRing>;
using DimEngine = Engine<DimRing>;

template <class V, class F>
auto table_map(const Table<V>& t, F f) {
  Table<decltype(f(t[0]))> out;
  for (int i = 0; i < 4; ++i) out[i] = f(t[i]);
  return out;
}

struct CohomologyTable {
  Weight weight;
  Bundle bundle = Bundle::Plain;
  Int p = 0;
  Table<Character> chars;

  std::array<Int, 4> dims() const;
  Character euler() const;
  nlohmann::json to_json() const;
};

CohomologyTable cohomology(CharEngine& engine, const Weight& w, Bundle b);
CohomologyTable serre_dual(const CohomologyTable& t);

// Degrees i with H^i(lambda) nonzero.
std::set<int> nonvanishing_pattern(DimEngine& engine, const Weight& w);
// Closed-form test for H^1 and H^2 both nonzero, up to tau.
bool andersen_criterion(const Weight& w, Int p);

}  // namespace sl3
