#pragma once

#include <optional>

#include <json.hpp>

#include "sl3/cohomology.hpp"

namespace sl3 {

enum class SupportKind { Zero, SubregularClosure, NilpotentCone };
const char* name(SupportKind k);
int variety_dimension(SupportKind k);  // 0, 4 or 6
SupportKind support_kind_of(Regularity r);

struct SupportEvidence {
  int psi_order = 0;
  bool quantum_dim_nonzero = false;
  Int complexity_lower_bound = 0;
};

struct SupportClass {
  Weight weight;
  int degree = 0;
  Int p = 0;
  SupportKind kind = SupportKind::Zero;
  SupportEvidence evidence;

  int dim() const { return variety_dimension(kind); }
  nlohmann::json to_json() const;
};

// Absent when H^i(lambda) = 0. The class is read off Phi_lambda; the
// psi_p-order data is attached as evidence.
std::optional<SupportClass> support_variety(GenericEngine& engine, const Weight& w, int i);

// max(0, 6 - d(Phi,p) - 2 * order) for the generic dimension of H^i.
Int complexity_lower_bound(GenericEngine& engine, const Weight& w, int i);

struct ProjectivityResult {
  bool projective = false;
  int psi_order = 0;
};
// Needs p >= 3; p = 2 goes through the alternative method in identities.
ProjectivityResult projectivity_test(GenericEngine& engine, const Weight& w, int i);

}  // namespace sl3
