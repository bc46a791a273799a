#include "sl3/charring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl3 {

namespace {

struct Box {
  Int r0, r1, s0, s1;  // inclusive
  Int width() const { return r1 - r0 + 1; }
  Int height() const { return s1 - s0 + 1; }
  Int area() const { return mul_checked(width(), height()); }
};

Box bounding_box(const std::vector<Character::Term>& t) {
  Box b{t.front().first.r, t.front().first.r, t.front().first.s, t.front().first.s};
  for (const auto& [w, m] : t) {
    b.r0 = std::min(b.r0, w.r);
    b.r1 = std::max(b.r1, w.r);
    b.s0 = std::min(b.s0, w.s);
    b.s1 = std::max(b.s1, w.s);
  }
  return b;
}

// Dense accumulator over a rectangle; read back in sorted (r,s) order.
class Grid {
 public:
  explicit Grid(Box b) : box_(b), cells_(static_cast<std::size_t>(b.area()), 0) {}
  bool contains(const Weight& w) const {
    return w.r >= box_.r0 && w.r <= box_.r1 && w.s >= box_.s0 && w.s <= box_.s1;
  }
  Int& at(const Weight& w) {
    return cells_[static_cast<std::size_t>((w.r - box_.r0) * box_.height() + (w.s - box_.s0))];
  }
  std::vector<Character::Term> drain() const {
    std::vector<Character::Term> out;
    for (Int i = 0; i < box_.width(); ++i)
      for (Int j = 0; j < box_.height(); ++j) {
        Int v = cells_[static_cast<std::size_t>(i * box_.height() + j)];
        if (v) out.push_back({{box_.r0 + i, box_.s0 + j}, v});
      }
    return out;
  }
  const Box& box() const { return box_; }

 private:
  Box box_;
  std::vector<Int> cells_;
};

constexpr Int kDenseLimit = 1 << 26;

}  // namespace

Character Character::monomial(const Weight& w, Int m) {
  Character c;
  if (m) c.terms_.push_back({w, m});
  return c;
}

Character Character::from_terms(std::vector<Term> terms) {
  auto by_weight = [](const Term& a, const Term& b) { return a.first < b.first; };
  if (!std::is_sorted(terms.begin(), terms.end(), by_weight)) std::sort(terms.begin(), terms.end(), by_weight);
  Character c;
  c.terms_.reserve(terms.size());
  for (const auto& [w, m] : terms) {
    if (!c.terms_.empty() && c.terms_.back().first == w)
      c.terms_.back().second = add_checked(c.terms_.back().second, m);
    else
      c.terms_.push_back({w, m});
  }
  std::erase_if(c.terms_, [](const Term& t) { return t.second == 0; });
  return c;
}

Int Character::dimension() const {
  Int d = 0;
  for (const auto& t : terms_) d = add_checked(d, t.second);
  return d;
}

Int Character::multiplicity(const Weight& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Weight& x) { return t.first < x; });
  return (it != terms_.end() && it->first == w) ? it->second : 0;
}

bool Character::all_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

Character Character::operator-() const {
  Character c = *this;
  for (auto& t : c.terms_) t.second = sub_checked(0, t.second);
  return c;
}

Character Character::combine(const Character& a, const Character& b, Int sign) {
  Character c;
  c.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      c.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      c.terms_.push_back({j->first, mul_checked(sign, j->second)});
      ++j;
    } else {
      Int v = add_checked(i->second, mul_checked(sign, j->second));
      if (v) c.terms_.push_back({i->first, v});
      ++i;
      ++j;
    }
  }
  return c;
}

Character& Character::operator+=(const Character& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = combine(*this, o, 1);
}

Character& Character::operator-=(const Character& o) {
  if (o.is_zero()) return *this;
  return *this = combine(*this, o, -1);
}

Character operator*(Int k, const Character& c) {
  if (k == 0) return {};
  Character out = c;
  for (auto& t : out.terms_) t.second = mul_checked(k, t.second);
  return out;
}

Character multiply(const Character& a, const Character& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms().front().first == Weight{0, 0}) return a.terms().front().second * b;
  if (b.size() == 1 && b.terms().front().first == Weight{0, 0}) return b.terms().front().second * a;
  Box ba = bounding_box(a.terms()), bb = bounding_box(b.terms());
  Box box{ba.r0 + bb.r0, ba.r1 + bb.r1, ba.s0 + bb.s0, ba.s1 + bb.s1};
  if (box.area() > kDenseLimit) {
    std::map<Weight, Int> acc;
    for (const auto& [u, m] : a.terms())
      for (const auto& [v, n] : b.terms()) {
        Int& slot = acc[u + v];
        slot = add_checked(slot, mul_checked(m, n));
      }
    return Character::from_terms({acc.begin(), acc.end()});
  }
  Grid g(box);
  for (const auto& [u, m] : a.terms())
    for (const auto& [v, n] : b.terms()) {
      Int& slot = g.at({u.r + v.r, u.s + v.s});
      slot = add_checked(slot, mul_checked(m, n));
    }
  return Character::from_terms(g.drain());
}

Character frobenius_twist(const Character& c, Int p) {
  std::vector<Character::Term> t;
  t.reserve(c.size());
  for (const auto& [w, m] : c.terms()) t.push_back({w * p, m});
  return Character::from_terms(std::move(t));
}

Character tau(const Character& c) {
  std::vector<Character::Term> t;
  t.reserve(c.size());
  for (const auto& [w, m] : c.terms()) t.push_back({{w.s, w.r}, m});
  return Character::from_terms(std::move(t));
}

Character dual(const Character& c) {
  std::vector<Character::Term> t;
  t.reserve(c.size());
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) t.push_back({-it->first, it->second});
  return Character::from_terms(std::move(t));
}

// Division with respect to the group order key(w) = (2r+s, r), compatible with
// translation. Remainder terms are processed from the top key downwards.
Character exact_divide(const Character& num, const Character& den) {
  if (den.is_zero()) throw std::domain_error("division by zero character");
  if (num.is_zero()) return {};
  auto key_less = [](const Weight& a, const Weight& b) {
    Int ka = 2 * a.r + a.s, kb = 2 * b.r + b.s;
    return ka != kb ? ka < kb : a.r < b.r;
  };
  Weight lead = den.terms().front().first;
  Int lead_m = den.terms().front().second;
  for (const auto& [w, m] : den.terms())
    if (key_less(lead, w)) lead = w, lead_m = m;

  Box box = bounding_box(num.terms());
  if (box.area() > kDenseLimit) throw std::domain_error("character too large for division");
  Grid rem(box);
  for (const auto& [w, m] : num.terms()) rem.at(w) = m;
  Grid quotient({box.r0 - lead.r, box.r1 - lead.r, box.s0 - lead.s, box.s1 - lead.s});

  const Int kmax = 2 * box.r1 + box.s1, kmin = 2 * box.r0 + box.s0;
  for (Int k = kmax; k >= kmin; --k) {
    const Int rhi = std::min(box.r1, floor_div(k - box.s0, 2));
    const Int rlo = std::max(box.r0, -floor_div(box.s1 - k, 2));
    for (Int r = rhi; r >= rlo; --r) {
      const Int s = k - 2 * r;
      const Weight pos{r, s};
      Int c = rem.at(pos);
      if (c == 0) continue;
      if (c % lead_m != 0) throw std::domain_error("inexact division");
      const Int q = c / lead_m;
      const Weight shift = pos - lead;
      quotient.at(shift) = q;
      for (const auto& [w, m] : den.terms()) {
        const Weight t = w + shift;
        if (!rem.contains(t)) throw std::domain_error("inexact division");
        Int& slot = rem.at(t);
        slot = sub_checked(slot, mul_checked(q, m));
      }
    }
  }
  return Character::from_terms(quotient.drain());
}

namespace {

Character alternating_sum(const Weight& v) {
  std::vector<Character::Term> t;
  for (WeylElement w : weyl_group()) t.push_back({act(w, v), det(w)});
  return Character::from_terms(std::move(t));
}

}  // namespace

Character weyl_character(const Weight& w) {
  auto rep = dominant_representative(w);
  if (!rep) return {};
  static const Character den = alternating_sum(kRho);
  Character q = exact_divide(alternating_sum(rep->mu + kRho), den);
  return rep->sign * q;
}

Character simple_character(Int a, Int b, Int p) {
  if (a < 0 || b < 0 || a >= p || b >= p)
    throw std::invalid_argument("simple_character needs a restricted weight, got " + Weight{a, b}.str());
  Character c = weyl_character({a, b});
  if (a + b >= p - 1) c -= weyl_character({p - 2 - b, p - 2 - a});
  return c;
}

Character orbit_sum(const Weight& w) {
  std::vector<Weight> seen;
  for (WeylElement x : weyl_group()) {
    Weight u = act(x, w);
    if (std::find(seen.begin(), seen.end(), u) == seen.end()) seen.push_back(u);
  }
  std::vector<Character::Term> t;
  for (const Weight& u : seen) t.push_back({u, 1});
  return Character::from_terms(std::move(t));
}

Int weyl_dimension(const Weight& w) {
  const Int x = w.r + 1, y = w.s + 1;
  return mul_checked(mul_checked(x, y), x + y) / 2;
}

Int simple_dimension(Int a, Int b, Int p) {
  Int d = weyl_dimension({a, b});
  if (a + b >= p - 1) d = sub_checked(d, weyl_dimension({p - 2 - b, p - 2 - a}));
  return d;
}

nlohmann::json to_json(const Character& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, m] : c.terms()) out.push_back({{"weight", {w.r, w.s}}, {"mult", m}});
  return out;
}

Character character_from_json(const nlohmann::json& j) {
  std::vector<Character::Term> t;
  for (const auto& e : j) t.push_back({{e.at("weight").at(0).get<Int>(), e.at("weight").at(1).get<Int>()}, e.at("mult").get<Int>()});
  return Character::from_terms(std::move(t));
}

}  // namespace sl3
