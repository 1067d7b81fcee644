#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/exterior.hpp"
#include "darboux/normal_form.hpp"

namespace darboux {

enum class StructureKind {
  symplectic,
  presymplectic,
  cosymplectic,
  precosymplectic,
  k_symplectic,
  k_presymplectic,
  k_cosymplectic,
  k_precosymplectic,
  multisymplectic,
  unknown,
};

std::string to_string(StructureKind kind);
StructureKind parse_structure_kind(const std::string& name);
const std::vector<StructureKind>& all_structure_kinds();

// Parameters either declared by the user or computed by a checker.
struct StructureParams {
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::optional<std::vector<std::size_t>> r;
  std::optional<std::size_t> degree;
  bool operator==(const StructureParams&) const = default;
};

struct StructureSpec {
  StructureKind kind = StructureKind::unknown;
  std::size_t dim = 0;
  std::vector<AltForm> etas;
  std::vector<AltForm> omegas;
  std::optional<AltForm> big_omega;  // multisymplectic form of arbitrary degree
  std::optional<Subspace> V;
  std::optional<Splitting> splitting;
  std::optional<Mat> metric;
  StructureParams declared;

  // Transport every datum through the linear change of basis L (forms pulled
  // back, vectors mapped by L^-1, metric by L^T g L).
  StructureSpec pulled_back(const Mat& L) const;
};

struct Clause {
  std::string name;
  std::string citation;
  bool pass = true;
  std::vector<Vec> witness;  // vectors violating the clause, empty on success
  std::string note;
};

struct Verdict {
  StructureKind kind = StructureKind::unknown;
  bool accepted = false;
  std::vector<Clause> clauses;
  StructureParams params;
  std::map<std::string, std::vector<Vec>> data;  // named subspaces / vectors
  std::string note;

  const Clause* find(const std::string& name) const;
  const Clause* first_failure() const;
};

struct Classification {
  std::vector<Verdict> verdicts;
  std::vector<StructureKind> accepted;
  std::optional<Verdict> standard;  // standard n-plectic check for degree >= 3
};

// Runs every checker. Declared parameters are only held against the declared kind.
Classification classify(const StructureSpec& spec);
Verdict check(StructureKind kind, const StructureSpec& spec);

Verdict check_symplectic(const AltForm& omega);
Verdict check_presymplectic(const AltForm& omega, const StructureParams& declared = {});
Verdict check_cosymplectic(const AltForm& eta, const AltForm& omega);
Verdict check_precosymplectic(const AltForm& eta, const AltForm& omega, const StructureParams& declared = {});
Verdict check_k_symplectic(const std::vector<AltForm>& omegas, const std::optional<Subspace>& V,
                           const StructureParams& declared = {});
Verdict check_k_presymplectic(const std::vector<AltForm>& omegas, const std::optional<Subspace>& V,
                              const std::optional<Splitting>& splitting, const std::optional<Mat>& metric,
                              const StructureParams& declared = {});
Verdict check_k_cosymplectic(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                             const std::optional<Subspace>& V, const StructureParams& declared = {});
Verdict check_k_precosymplectic(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                const std::optional<Subspace>& V, const std::optional<Splitting>& splitting,
                                const StructureParams& declared = {});
Verdict check_multisymplectic(const AltForm& big_omega);

enum class IsotropyType { isotropic, coisotropic, lagrangian, none };
std::string to_string(IsotropyType t);
IsotropyType isotropy_type(const Subspace& W, const AltForm& big_omega, std::size_t r);

// Looks for W with i_{u^v} Omega = 0 on W and Omega^#: W -> L^n(V/W)* an
// isomorphism. The candidate W is recorded under data["W"].
Verdict check_standard_nplectic(const AltForm& big_omega);

}  // namespace darboux

namespace darboux {

// Runs the Darboux construction matching spec.kind. When a k-(pre)symplectic
// splitting is missing, a candidate is computed from the metric (identity if
// none is given).
DarbouxReport normal_form(const StructureSpec& spec);

}  // namespace darboux
