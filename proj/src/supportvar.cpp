#include "sl3/supportvar.hpp"

#include <algorithm>

namespace sl3 {

const char* name(SupportKind k) {
  switch (k) {
    case SupportKind::Zero: return "Zero";
    case SupportKind::SubregularClosure: return "SubregularClosure";
    case SupportKind::NilpotentCone: return "NilpotentCone";
  }
  return "?";
}

int variety_dimension(SupportKind k) {
  switch (k) {
    case SupportKind::Zero: return 0;
    case SupportKind::SubregularClosure: return 4;
    case SupportKind::NilpotentCone: return 6;
  }
  return -1;
}

SupportKind support_kind_of(Regularity r) {
  switch (r) {
    case Regularity::Regular: return SupportKind::NilpotentCone;
    case Regularity::Subregular: return SupportKind::SubregularClosure;
    case Regularity::Steinberg: return SupportKind::Zero;
  }
  return SupportKind::Zero;
}

namespace {

void check_degree(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("degree must be in 0..3, got " + std::to_string(i));
}

LaurentPoly nonzero_generic(GenericEngine& engine, const Weight& w, int i) {
  check_degree(i);
  LaurentPoly f = engine.plain(w)[static_cast<std::size_t>(i)];
  if (f.is_zero()) throw std::domain_error("H^" + std::to_string(i) + w.str() + " is zero");
  return f;
}

Int bound_from_order(Int p, int order) { return std::max<Int>(0, 6 - d_phi_p(p) - 2 * order); }

}  // namespace

std::optional<SupportClass> support_variety(GenericEngine& engine, const Weight& w, int i) {
  check_degree(i);
  const LaurentPoly f = engine.plain(w)[static_cast<std::size_t>(i)];
  if (f.is_zero()) return std::nullopt;
  const Int p = engine.p();
  SupportClass out{w, i, p, support_kind_of(regularity_class(w, p).kind), {}};
  out.evidence.psi_order = psi_order(f, p);
  out.evidence.quantum_dim_nonzero = !quantum_eval(f, p).is_zero();
  out.evidence.complexity_lower_bound = bound_from_order(p, out.evidence.psi_order);
  return out;
}

Int complexity_lower_bound(GenericEngine& engine, const Weight& w, int i) {
  return bound_from_order(engine.p(), psi_order(nonzero_generic(engine, w, i), engine.p()));
}

ProjectivityResult projectivity_test(GenericEngine& engine, const Weight& w, int i) {
  if (engine.p() < 3) throw std::invalid_argument("projectivity test needs p >= 3; use the p=2 method");
  const int k = psi_order(nonzero_generic(engine, w, i), engine.p());
  return {k >= 3, k};
}

nlohmann::json SupportClass::to_json() const {
  return {{"weight", {weight.r, weight.s}},
          {"i", degree},
          {"p", p},
          {"class", name(kind)},
          {"dim", dim()},
          {"evidence",
           {{"psi_order", evidence.psi_order},
            {"quantum_dim_nonzero", evidence.quantum_dim_nonzero},
            {"complexity_lower_bound", evidence.complexity_lower_bound}}}};
}

}  // namespace sl3
