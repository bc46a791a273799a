#include "sl3/gendim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sl3 {

LaurentPoly::LaurentPoly(Int constant) {
  if (constant) c_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(Int exponent, Int coeff) {
  LaurentPoly f;
  if (coeff) {
    f.low_ = exponent;
    f.c_.push_back(coeff);
  }
  return f;
}

LaurentPoly LaurentPoly::from_coeffs(Int low, std::vector<Int> coeffs) {
  LaurentPoly f;
  f.low_ = low;
  f.c_ = std::move(coeffs);
  f.trim();
  return f;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<Int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Int LaurentPoly::coeff(Int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (Int& x : f.c_) x = sub_checked(0, x);
  return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    Int& slot = out[static_cast<std::size_t>(o.low_ - lo) + i];
    slot = add_checked(slot, o.c_[i]);
  }
  low_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = add_checked(out[i + j], mul_checked(a.c_[i], b.c_[j]));
  }
  return LaurentPoly::from_coeffs(add_checked(a.low_, b.low_), std::move(out));
}

LaurentPoly LaurentPoly::substitute_power(Int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power needs k != 0");
  if (is_zero()) return {};
  std::map<Int, Int> acc;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) acc[mul_checked(low_ + static_cast<Int>(i), k)] += c_[i];
  const Int lo = acc.begin()->first, hi = acc.rbegin()->first;
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, v] : acc) out[static_cast<std::size_t>(e - lo)] = v;
  return from_coeffs(lo, std::move(out));
}

LaurentPoly LaurentPoly::derivative() const {
  if (is_zero()) return {};
  std::vector<Int> out(c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mul_checked(c_[i], low_ + static_cast<Int>(i));
  return from_coeffs(low_ - 1, std::move(out));
}

Int LaurentPoly::eval_at_one() const {
  Int v = 0;
  for (Int x : c_) v = add_checked(v, x);
  return v;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const auto& bc = b.coeffs();
  std::vector<Int> rem = a.coeffs();
  const Int bl = bc.back();
  if (rem.size() < bc.size()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> q(rem.size() - bc.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Int top = rem[i + bc.size() - 1];
    if (top % bl != 0) throw std::domain_error("inexact polynomial division");
    const Int c = top / bl;
    q[i] = c;
    if (c)
      for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] = sub_checked(rem[i + j], mul_checked(c, bc[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Int x) { return x != 0; }))
    throw std::domain_error("inexact polynomial division");
  return LaurentPoly::from_coeffs(a.low() - b.low(), std::move(q));
}

LaurentPoly specialize_generic(const Character& c) {
  if (c.is_zero()) return {};
  std::map<Int, Int> acc;
  for (const auto& [w, m] : c.terms()) {
    Int& slot = acc[mul_checked(-2, wht(w))];
    slot = add_checked(slot, m);
  }
  const Int lo = acc.begin()->first, hi = acc.rbegin()->first;
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, v] : acc) out[static_cast<std::size_t>(e - lo)] = v;
  return LaurentPoly::from_coeffs(lo, std::move(out));
}

namespace {

LaurentPoly antisym(Int n) { return LaurentPoly::monomial(n) - LaurentPoly::monomial(-n); }

}  // namespace

LaurentPoly weyl_generic_dimension(const Weight& w) {
  const Int x = w.r + 1, y = w.s + 1;
  if (x == 0 || y == 0 || x + y == 0) return {};
  LaurentPoly num = antisym(x) * antisym(y) * antisym(x + y);
  static const LaurentPoly den = antisym(1) * antisym(1) * antisym(2);
  return exact_divide(num, den);
}

LaurentPoly psi_poly(Int p) { return LaurentPoly::from_coeffs(0, std::vector<Int>(static_cast<std::size_t>(p), 1)); }

int psi_order(const LaurentPoly& f, Int p) {
  if (f.is_zero()) throw std::domain_error("psi_order of the zero polynomial is undefined");
  const LaurentPoly psi = psi_poly(p);
  LaurentPoly cur = f;
  int k = 0;
  while (true) {
    try {
      cur = exact_divide(cur, psi);
    } catch (const std::domain_error&) {
      return k;
    }
    ++k;
  }
}

CycloElement::CycloElement(Int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {
  if (p < 2) throw std::invalid_argument("cyclotomic ring needs p >= 2");
}

CycloElement CycloElement::integer(Int p, const mpq_class& v) {
  CycloElement z(p);
  z.c_[0] = v;
  return z;
}

CycloElement CycloElement::zeta_power(Int p, Int k) {
  CycloElement z(p);
  const Int e = floor_mod(k, p);
  if (e < p - 1) {
    z.c_[static_cast<std::size_t>(e)] = 1;
  } else {
    for (auto& x : z.c_) x = -1;
  }
  return z;
}

bool CycloElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycloElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class CycloElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
  return c_[0];
}

CycloElement CycloElement::operator-() const {
  CycloElement z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic fields");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) { return *this += -o; }

CycloElement CycloElement::from_exponents(Int p, std::vector<mpq_class> full) {
  // full[e] multiplies t^e, 0 <= e < p; t^{p-1} = -(1 + t + ... + t^{p-2})
  CycloElement z(p);
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = full[i] - full[static_cast<std::size_t>(p - 1)];
  return z;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("mixed cyclotomic fields");
  const Int p = a.p_;
  std::vector<mpq_class> full(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      full[(i + j) % static_cast<std::size_t>(p)] += a.c_[i] * b.c_[j];
  }
  return CycloElement::from_exponents(p, std::move(full));
}

CycloElement operator*(const mpq_class& k, const CycloElement& a) {
  CycloElement z = a;
  for (auto& x : z.c_) x *= k;
  return z;
}

bool operator==(const CycloElement& a, const CycloElement& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in the cyclotomic field");
  const std::size_t n = c_.size();
  // Column j of M is this * t^j; solve M x = e_0.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    CycloElement col = *this * zeta_power(p_, static_cast<Int>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    const mpq_class lead = m[col][col];
    for (auto& x : m[col]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (std::size_t k = col; k <= n; ++k) m[i][k] -= f * m[col][k];
    }
  }
  CycloElement z(p_);
  for (std::size_t i = 0; i < n; ++i) z.c_[i] = m[i][n];
  return z;
}

CycloElement quantum_eval(const LaurentPoly& f, Int p) {
  std::vector<mpq_class> full(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Int c = f.coeffs()[i];
    if (c) full[static_cast<std::size_t>(floor_mod(f.low() + static_cast<Int>(i), p))] += mpq_class(static_cast<long>(c));
  }
  return CycloElement::from_exponents(p, std::move(full));
}

CycloElement derivative_eval(const LaurentPoly& f, int order, Int p) {
  if (order < 1 || order > 2) throw std::invalid_argument("derivative order must be 1 or 2");
  LaurentPoly g = f.derivative();
  if (order == 2) g = g.derivative();
  return quantum_eval(g, p);
}

Int derivative_at_one(const LaurentPoly& f, int order) {
  LaurentPoly g = f;
  for (int i = 0; i < order; ++i) g = g.derivative();
  return g.eval_at_one();
}

Int d_phi_p(Int p) {
  Int count = 0;
  for (const Root& g : roots())
    if (floor_mod(pairing(kRho, g), p) == 0) ++count;
  return count;
}

nlohmann::json to_json(const LaurentPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i]) out.push_back({f.low() + static_cast<Int>(i), f.coeffs()[i]});
  return out;
}

nlohmann::json to_json(const CycloElement& z) {
  nlohmann::json out = nlohmann::json::array();
  auto num = [](const mpz_class& v) -> nlohmann::json {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
  };
  for (const auto& x : z.coords()) out.push_back({num(x.get_num()), num(x.get_den())});
  return out;
}

}  // namespace sl3
