#include "sl3/weights.hpp"

#include <cstdlib>
#include <sstream>

namespace sl3 {

Int add_checked(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

Int sub_checked(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

Int mul_checked(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

Int pow_checked(Int base, unsigned exp) {
  Int out = 1;
  while (exp--) out = mul_checked(out, base);
  return out;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int Weight::norm() const { return std::max(std::llabs(r), std::llabs(s)); }

std::string Weight::str() const {
  std::ostringstream os;
  os << '(' << r << ',' << s << ')';
  return os.str();
}

Int wht(const Weight& w) { return add_checked(w.r, w.s); }

const std::array<Root, 6>& roots() {
  static const std::array<Root, 6> table{{
      {{2, -1}, 1, 0, "alpha"},
      {{-1, 2}, 0, 1, "beta"},
      {{1, 1}, 1, 1, "alpha+beta"},
      {{-2, 1}, -1, 0, "-alpha"},
      {{1, -2}, 0, -1, "-beta"},
      {{-1, -1}, -1, -1, "-alpha-beta"},
  }};
  return table;
}

Int pairing(const Weight& w, const Root& g) {
  return add_checked(mul_checked(g.cr, w.r), mul_checked(g.cs, w.s));
}

const std::array<WeylElement, 6>& weyl_group() {
  static const std::array<WeylElement, 6> all{WeylElement::e,    WeylElement::sa,   WeylElement::sb,
                                              WeylElement::sasb, WeylElement::sbsa, WeylElement::w0};
  return all;
}

int det(WeylElement w) {
  switch (w) {
    case WeylElement::e:
    case WeylElement::sasb:
    case WeylElement::sbsa:
      return 1;
    default:
      return -1;
  }
}

const char* name(WeylElement w) {
  switch (w) {
    case WeylElement::e: return "e";
    case WeylElement::sa: return "s_alpha";
    case WeylElement::sb: return "s_beta";
    case WeylElement::sasb: return "s_alpha s_beta";
    case WeylElement::sbsa: return "s_beta s_alpha";
    case WeylElement::w0: return "w0";
  }
  return "?";
}

Weight act(WeylElement w, const Weight& v) {
  const Int x = v.r, y = v.s;
  switch (w) {
    case WeylElement::e: return {x, y};
    case WeylElement::sa: return {-x, add_checked(x, y)};
    case WeylElement::sb: return {add_checked(x, y), -y};
    case WeylElement::sasb: return {-add_checked(x, y), x};
    case WeylElement::sbsa: return {y, -add_checked(x, y)};
    case WeylElement::w0: return {-y, -x};
  }
  return v;
}

Weight dot_action(WeylElement w, const Weight& v) { return act(w, v + kRho) - kRho; }

WeylElement compose(WeylElement a, WeylElement b) {
  const Weight e1{1, 0}, e2{0, 1};
  const Weight t1 = act(a, act(b, e1)), t2 = act(a, act(b, e2));
  for (WeylElement c : weyl_group())
    if (act(c, e1) == t1 && act(c, e2) == t2) return c;
  throw std::logic_error("Weyl group not closed under composition");
}

WeylElement inverse(WeylElement w) {
  for (WeylElement c : weyl_group())
    if (compose(c, w) == WeylElement::e) return c;
  throw std::logic_error("no inverse");
}

std::optional<DominantRep> dominant_representative(const Weight& w) {
  const Weight v = w + kRho;
  if (v.r == 0 || v.s == 0 || v.r + v.s == 0) return std::nullopt;
  for (WeylElement c : weyl_group()) {
    Weight u = act(c, v);
    if (u.r > 0 && u.s > 0) return DominantRep{c, u - kRho, det(c)};
  }
  return std::nullopt;
}

const char* name(Regularity c) {
  switch (c) {
    case Regularity::Regular: return "regular";
    case Regularity::Subregular: return "subregular";
    case Regularity::Steinberg: return "steinberg";
  }
  return "?";
}

RegularityClass regularity_class(const Weight& w, Int p) {
  RegularityClass out{Regularity::Regular, {}};
  const Weight v = w + kRho;
  for (const Root& g : roots())
    if (floor_mod(pairing(v, g), p) == 0) out.phi.push_back(g.root);
  if (out.phi.size() == 6)
    out.kind = Regularity::Steinberg;
  else if (out.phi.size() == 2)
    out.kind = Regularity::Subregular;
  else if (!out.phi.empty())
    throw std::logic_error("impossible root subset size");
  return out;
}

Weight PAdicExpansion::low_part() const {
  Weight acc{0, 0};
  Int scale = 1;
  for (const Weight& d : digits) {
    acc = acc + d * scale;
    scale = mul_checked(scale, p);
  }
  return acc;
}

Weight PAdicExpansion::reassemble() const {
  return low_part() + tail * pow_checked(p, static_cast<unsigned>(digits.size()));
}

PAdicExpansion p_adic_expand(const Weight& w, Int p, bool normalize) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (mul_checked(w.r + 1, w.s + 1) > 0)
    throw ExpansionError("p-adic expansion needs (r+1)(s+1) <= 0, got " + w.str());
  PAdicExpansion out;
  out.p = p;
  Weight cur = w;
  auto reduced = [p](const Weight& t) { return t.r >= -p && t.r <= p - 1; };
  while (true) {
    const bool on_line = cur.r + cur.s == -1;
    if (on_line && (normalize || reduced(cur))) break;
    if (cur == Weight{-1, -1}) throw ExpansionError("no fundamental-line tail exists for " + w.str());
    out.digits.push_back({floor_mod(cur.r, p), floor_mod(cur.s, p)});
    cur = {floor_div(cur.r, p), floor_div(cur.s, p)};
  }
  out.tail = cur;
  return out;
}

Weight parse_weight(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("weight must be r,s: " + text);
  std::size_t used = 0;
  Weight w;
  const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
  w.r = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad weight coordinate: " + a);
  w.s = std::stoll(b, &used);
  if (used != b.size()) throw std::invalid_argument("bad weight coordinate: " + b);
  return w;
}

bool linked_to_zero(const Weight& w, Int p) {
  const Weight v = w + kRho;
  for (WeylElement x : weyl_group()) {
    const Weight d = v - act(x, kRho);
    if (floor_mod(d.r, p) || floor_mod(d.s, p)) continue;
    if (floor_mod(d.r / p + 2 * (d.s / p), 3) == 0) return true;
  }
  return false;
}

}  // namespace sl3
