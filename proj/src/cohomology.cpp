#include "sl3/cohomology.hpp"

#include <mutex>

namespace sl3 {

const char* name(Bundle b) {
  switch (b) {
    case Bundle::Plain: return "plain";
    case Bundle::Alpha: return "alpha";
    case Bundle::Beta: return "beta";
  }
  return "?";
}

Bundle parse_bundle(const std::string& s) {
  if (s == "plain") return Bundle::Plain;
  if (s == "alpha") return Bundle::Alpha;
  if (s == "beta") return Bundle::Beta;
  throw std::invalid_argument("unknown bundle '" + s + "' (plain|alpha|beta)");
}

Character CharRing::weyl(const Weight& w) const {
  if (w.norm() > 4 * p_ + 8) return weyl_character(w);
  {
    std::shared_lock lock(mu_);
    auto it = weyl_cache_.find(w);
    if (it != weyl_cache_.end()) return it->second;
  }
  Character c = weyl_character(w);
  std::unique_lock lock(mu_);
  weyl_cache_.emplace(w, c);
  return c;
}

Character CharRing::simple(Int a, Int b) const {
  if (a < 0 || b < 0 || a >= p_ || b >= p_)
    throw std::invalid_argument("simple character needs a restricted weight, got " + Weight{a, b}.str());
  Character c = weyl({a, b});
  if (a + b >= p_ - 1) c -= weyl({p_ - 2 - b, p_ - 2 - a});
  return c;
}

LaurentPoly GenericRing::simple(Int a, Int b) const {
  if (a < 0 || b < 0 || a >= p_ || b >= p_)
    throw std::invalid_argument("simple character needs a restricted weight, got " + Weight{a, b}.str());
  LaurentPoly f = weyl_generic_dimension({a, b});
  if (a + b >= p_ - 1) f -= weyl_generic_dimension({p_ - 2 - b, p_ - 2 - a});
  return f;
}

template <class Ring>
Engine<Ring>::Engine(Int p, EngineOptions opts) : ring_(p), opts_(opts) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

template <class Ring>
std::size_t Engine<Ring>::cache_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

template <class Ring>
std::optional<typename Engine<Ring>::T> Engine<Ring>::lookup(const Key& k) const {
  if (opts_.cache_radius < 0 || k.w.norm() > opts_.cache_radius) return std::nullopt;
  std::shared_lock lock(mu_);
  auto it = memo_.find(k);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

template <class Ring>
void Engine<Ring>::store(const Key& k, const T& t) {
  if (opts_.cache_radius < 0 || k.w.norm() > opts_.cache_radius) return;
  std::unique_lock lock(mu_);
  memo_.emplace(k, t);
}

template <class Ring>
bool Engine<Ring>::base_applies(const Weight& w) const {
  return w.dominant() || w.r == -1 || w.s == -1 || (w.r <= -2 && w.s <= -2);
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::base(const Weight& w) const {
  T t{Ring::zero(), Ring::zero(), Ring::zero(), Ring::zero()};
  if (w.dominant())
    t[0] = ring_.weyl(w);
  else if (w.r <= -2 && w.s <= -2)
    t[3] = Ring::dual(ring_.weyl({-w.r - 2, -w.s - 2}));
  return t;
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::coef(const Value& c, const T& t) const {
  T out;
  for (int i = 0; i < 4; ++i) out[i] = Ring::is_zero(t[i]) ? Ring::zero() : Ring::mul(c, ring_.twist(t[i]));
  return out;
}

namespace {

template <class V, class Ring>
Table<V> sum(std::initializer_list<Table<V>> parts) {
  Table<V> out{Ring::zero(), Ring::zero(), Ring::zero(), Ring::zero()};
  for (const auto& t : parts)
    for (int i = 0; i < 4; ++i)
      if (!Ring::is_zero(t[i])) out[i] = Ring::add(out[i], t[i]);
  return out;
}

}  // namespace

template <class Ring>
std::optional<typename Engine<Ring>::T> Engine<Ring>::reflect(const Weight& w, int direction, int depth) {
  if (depth > opts_.max_depth) throw EngineError("reflection chain too deep at " + w.str());
  if (base_applies(w)) return base(w);
  const Int p = ring_.p();
  for (int g = 0; g < 2; ++g) {
    const Int k = g == 0 ? w.r : w.s;
    const Weight mu = g == 0 ? Weight{w.r - 2 * (k + 1), w.s + (k + 1)} : Weight{w.r + (k + 1), w.s - 2 * (k + 1)};
    if (direction >= 0 && k >= 0 && k <= p - 1) {
      auto t = reflect(mu, 1, depth + 1);
      if (!t) continue;
      if (!Ring::is_zero((*t)[0])) throw EngineError("reflection produced degree -1 at " + w.str());
      return T{(*t)[1], (*t)[2], (*t)[3], Ring::zero()};
    }
    if (direction <= 0 && k >= -p - 1 && k <= -2) {
      auto t = reflect(mu, -1, depth + 1);
      if (!t) continue;
      if (!Ring::is_zero((*t)[3])) throw EngineError("reflection produced degree 4 at " + w.str());
      return T{Ring::zero(), (*t)[0], (*t)[1], (*t)[2]};
    }
  }
  return std::nullopt;
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::plain(const Weight& w, int depth) {
  if (depth > opts_.max_depth) throw EngineError("recursion too deep at " + w.str());
  if (base_applies(w)) return base(w);
  const Key key{w, false};
  if (auto hit = lookup(key)) return *hit;
  std::optional<T> t;
  if (w.norm() <= opts_.small_zone) t = reflect(w, 0, depth);
  if (!t) t = digits_plain(w, depth);
  store(key, *t);
  return *t;
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::beta_at(const Weight& w, int depth) {
  return table_map(alpha({w.s, w.r}, depth), [](const Value& v) { return Ring::tau(v); });
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::beta(const Weight& w) {
  return beta_at(w, 0);
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::get(const Weight& w, Bundle b) {
  switch (b) {
    case Bundle::Plain: return plain(w);
    case Bundle::Alpha: return alpha(w);
    case Bundle::Beta: return beta(w);
  }
  throw std::invalid_argument("bad bundle");
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::digits_plain(const Weight& w, int depth) {
  const Int p = ring_.p();
  const Int a = floor_mod(w.r, p), r0 = floor_div(w.r, p);
  const Int b = floor_mod(w.s, p), s0 = floor_div(w.s, p);
  const int d = depth + 1;
  auto h = [&](Int x, Int y) { return plain({x, y}, d); };
  auto ha = [&](Int x, Int y) { return alpha({x, y}, d); };
  auto hb = [&](Int x, Int y) { return beta_at({x, y}, d); };
  auto X = [&](Int u, Int v) { return ring_.weyl({u, v}); };
  auto L = [&](Int u, Int v) { return ring_.simple(u, v); };
  using S = Value;
  auto plus = [](const S& x, const S& y) { return Ring::add(x, y); };

  if (a == p - 1 && b == p - 1) return coef(L(p - 1, p - 1), h(r0, s0));
  if (a == p - 1)
    return sum<S, Ring>({coef(X(p - 1, b), h(r0, s0)), coef(X(p - 2 - b, p - 1), h(r0, s0 - 1)),
                         coef(X(b, p - 2 - b), ha(r0 + 1, s0 - 1))});
  if (b == p - 1) {
    const Int c = p - 2 - a;
    return sum<S, Ring>({coef(X(p - 2 - c, p - 1), h(r0, s0)), coef(X(p - 1, c), h(r0 - 1, s0)),
                         coef(X(c, p - 2 - c), hb(r0 - 1, s0 + 1))});
  }
  if (a + b == p - 2)
    return sum<S, Ring>({coef(X(a, p - 2 - a), h(r0, s0)), coef(X(p - 1, a), h(r0, s0 - 1)),
                         coef(X(p - 2 - a, p - 1), h(r0 - 1, s0)), coef(X(a, p - 2 - a), h(r0 - 1, s0 - 1))});
  if (p < 3) throw EngineError("regular digit at p=2 for " + w.str());
  if (a + b < p - 2)
    return sum<S, Ring>({coef(L(a, b), h(r0, s0)), coef(plus(L(p - 2 - b, p - 2 - a), L(a, b)), h(r0 - 1, s0 - 1)),
                         coef(L(a + b + 1, p - 2 - b), h(r0, s0 - 1)), coef(L(p - 2 - a, a + b + 1), h(r0 - 1, s0)),
                         coef(L(b, p - 3 - a - b), ha(r0, s0 - 1)), coef(L(p - 3 - a - b, a), hb(r0 - 1, s0))});
  return sum<S, Ring>({coef(plus(L(a, b), L(p - 2 - b, p - 2 - a)), h(r0, s0)),
                       coef(L(p - 2 - b, p - 2 - a), h(r0 - 1, s0 - 1)), coef(L(2 * p - 3 - a - b, a), h(r0, s0 - 1)),
                       coef(L(b, 2 * p - 3 - a - b), h(r0 - 1, s0)),
                       coef(L(a + b - p + 1, p - 2 - b), ha(r0 + 1, s0 - 1)),
                       coef(L(p - 2 - a, a + b - p + 1), hb(r0 - 1, s0 + 1))});
}

template <class Ring>
std::optional<typename Engine<Ring>::T> Engine<Ring>::alpha_formula(const Weight& w, int depth) {
  const Int p = ring_.p();
  const Int a = floor_mod(w.r, p), r0 = floor_div(w.r, p);
  const Int b = floor_mod(w.s, p), s0 = floor_div(w.s, p);
  if (a != 0) return std::nullopt;
  const int d = depth + 1;
  auto h = [&](Int x, Int y) { return plain({x, y}, d); };
  auto ha = [&](Int x, Int y) { return alpha({x, y}, d); };
  auto X = [&](Int u, Int v) { return ring_.weyl({u, v}); };
  auto L = [&](Int u, Int v) { return ring_.simple(u, v); };
  using S = Value;
  // x + c*y degreewise, before twisting
  auto inner = [&](const T& x, const S& c, const T& y) {
    T out;
    for (int i = 0; i < 4; ++i) out[i] = Ring::add(x[i], Ring::is_zero(y[i]) ? Ring::zero() : Ring::mul(c, y[i]));
    return out;
  };

  if (b == p - 1) {
    const T A = h(r0 - 1, s0), B = h(r0 - 1, s0 + 1);
    return sum<S, Ring>({coef(Ring::scale(2, X(p - 1, p - 2)), A), coef(X(p - 2, 0), inner(B, X(0, 1), A)),
                         coef(X(0, p - 1), ha(r0, s0))});
  }
  if (b == p - 2) {
    const T A = h(r0 - 1, s0), B = h(r0 - 1, s0 - 1);
    return sum<S, Ring>({coef(X(0, p - 2), inner(B, X(1, 0), A)), coef(X(p - 1, 0), ha(r0, s0 - 1)),
                         coef(Ring::scale(2, X(p - 2, p - 1)), A)});
  }
  const T A = h(r0 - 1, s0 - 1), B = h(r0 - 1, s0);
  const T C = ha(r0, s0 - 1);
  return sum<S, Ring>({coef(Ring::scale(2, L(p - 2 - b, p - 2)), A), coef(Ring::scale(2, L(b, p - 3 - b)), C),
                       coef(L(p - 3 - b, 0), inner(B, X(0, 1), A)), coef(Ring::scale(2, L(p - 2, b + 1)), B),
                       coef(L(b + 1, p - 2 - b), C), coef(L(0, b), inner(A, X(1, 0), B))});
}

template <class Ring>
typename Engine<Ring>::T Engine<Ring>::alpha(const Weight& w, int depth) {
  if (depth > opts_.max_depth) throw EngineError("recursion too deep at alpha " + w.str());
  const Key key{w, true};
  if (auto hit = lookup(key)) return *hit;
  const Int p = ring_.p();
  const bool split_class = floor_mod(w.r, p) != 0;
  std::optional<T> t;
  if (split_class || w.norm() <= opts_.small_zone) {
    const T t1 = plain(w, depth + 1), t2 = plain(w - kAlpha, depth + 1);
    bool les = true;
    for (int i = 0; i < 3; ++i)
      if (!Ring::is_zero(t1[i]) && !Ring::is_zero(t2[i + 1])) les = false;
    if (split_class || les) t = sum<Value, Ring>({t1, t2});
  }
  if (!t) t = alpha_formula(w, depth);
  if (!t) throw EngineError("alpha bundle at " + w.str() + " hit neither the split nor the recursive regime");
  store(key, *t);
  return *t;
}

template class Engine<CharRing>;
template class Engine<GenericRing>;
template class Engine<DimRing>;

std::array<Int, 4> CohomologyTable::dims() const {
  return {chars[0].dimension(), chars[1].dimension(), chars[2].dimension(), chars[3].dimension()};
}

Character CohomologyTable::euler() const { return chars[0] - chars[1] + chars[2] - chars[3]; }

nlohmann::json CohomologyTable::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : chars) c.push_back(sl3::to_json(x));
  auto d = dims();
  return {{"weight", {weight.r, weight.s}}, {"bundle", name(bundle)}, {"p", p},
          {"cohomology", c}, {"dims", {d[0], d[1], d[2], d[3]}}};
}

CohomologyTable cohomology(CharEngine& engine, const Weight& w, Bundle b) {
  return {w, b, engine.p(), engine.get(w, b)};
}

CohomologyTable serre_dual(const CohomologyTable& t) {
  if (t.bundle != Bundle::Plain) throw std::invalid_argument("serre_dual is defined for plain line bundles only");
  CohomologyTable out{-t.weight - kRho * 2, Bundle::Plain, t.p, {}};
  for (int i = 0; i < 4; ++i) out.chars[i] = dual(t.chars[3 - i]);
  return out;
}

bool andersen_criterion(const Weight& w, Int p) {
  Int r = w.r, s = w.s;
  if (r < s) std::swap(r, s);
  const Int limit = std::max<Int>(std::llabs(r), std::llabs(s)) + 1;
  for (Int q = p; q <= limit; q = mul_checked(q, p))
    for (Int t = 1; t <= p - 1; ++t) {
      const Int a = r - q * t, b = s + q * (t + 1);
      if (a >= 0 && a <= q - 2 && b >= 0 && b <= q - 2) return true;
    }
  return false;
}

std::set<int> nonvanishing_pattern(DimEngine& engine, const Weight& w) {
  std::set<int> out;
  auto t = engine.plain(w);
  for (int i = 0; i < 4; ++i)
    if (t[i] != 0) out.insert(i);
  const bool both = out.count(1) && out.count(2);
  if (both != andersen_criterion(w, engine.p()))
    throw EngineError("nonvanishing pattern disagrees with the closed-form criterion at " + w.str());
  return out;
}

}  // namespace sl3
