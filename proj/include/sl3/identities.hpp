#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/cohomology.hpp"
#include "sl3/gendim.hpp"

namespace sl3 {

// Shared engines for the dimension calculus at one prime.
class Calculus {
 public:
  explicit Calculus(Int p);
  Int p() const { return p_; }
  DimEngine& dims() { return dims_; }
  GenericEngine& generic() { return generic_; }

  Int delta(int i, const Weight& w);
  Int delta_alpha(int i, const Weight& w);
  Int delta_beta(int i, const Weight& w);
  LaurentPoly generic_dim(int i, const Weight& w);

 private:
  Int p_;
  DimEngine dims_;
  GenericEngine generic_;
};

struct STRecord {
  int i = 0;
  Weight w;
  Int S = 0, T = 0, phi = 0, psi = 0;
  nlohmann::json to_json() const;
};
STRecord st_values(Calculus& c, int i, const Weight& w);

// a(a+1)/2 (phi + psi) + p(p-1-2a)/2 phi at (r0,s0).
Int theta(Calculus& c, int i, const Weight& w0, Int a);

struct QRRecord {
  int j = 0;
  int i = 0;
  Weight w;
  Int Q = 0, R = 0;
  nlohmann::json to_json() const;
};
QRRecord qr_values(Calculus& c, int j, int i, const Weight& w);

// The subregular weight attached to (j, a, (r,s)).
Weight subregular_weight(int j, Int a, const Weight& w, Int p);

struct DerivativeForms {
  CycloElement exact_first, exact_second;      // formal derivatives of D^i_t
  CycloElement assembled_first;                // sum of q_k'(zeta) delta_k, q = p f / g
  CycloElement assembled_second;               // sum of (u_k + c_k v) delta_k
  CycloElement displayed_first;                // printed prefactor times Q_j
  CycloElement displayed_second;               // printed u/v display
  Int Q = 0, R = 0;
};
DerivativeForms h_derivative_closed_forms(Calculus& c, int j, int i, Int a, const Weight& w);

struct CaseResult {
  std::string name;
  Int tested = 0;
  Int passed = 0;
};

struct VerificationReport {
  std::string prop;
  Int p = 0;
  Int box = 0;
  bool applicable = true;
  std::string note;
  std::vector<CaseResult> cases;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json extra = nlohmann::json::object();

  bool ok() const;
  CaseResult& row(const std::string& name);
  // Records one check; failing checks keep up to a few witnesses.
  void record(const std::string& name, bool pass, const nlohmann::json& witness);
  nlohmann::json to_json() const;
};

struct PropositionInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
  bool needs_odd_prime;
};
const std::vector<PropositionInfo>& propositions();
// Resolves an id or alias; throws std::invalid_argument for unknown ids.
const PropositionInfo& find_proposition(const std::string& id);

Int default_box(const std::string& id, Int p);

VerificationReport verify(const std::string& id, Int p, Int box, int jobs = 1);

// Checks chi^1(lambda) = chi_p(0,p^n) chi^1(mu) + chi^0(lambda + p^n beta) with
// mu = lambda - p^n(1,-1). Throws std::invalid_argument when lambda is not eligible.
VerificationReport p2_method_check(CharEngine& chars, GenericEngine& gen, const Weight& w, Int n);
bool p2_method_eligible(const Weight& w, Int n, Int p);

}  // namespace sl3
