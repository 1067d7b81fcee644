#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/exterior.hpp"

namespace darboux {

enum class TemplateKind {
  symplectic,
  presymplectic,
  cosymplectic,
  precosymplectic,
  k_symplectic,
  k_presymplectic,
  k_cosymplectic,
  k_precosymplectic,
};

std::string to_string(TemplateKind kind);

// Model forms in the model basis. Coordinate layouts:
//   symplectic / presymplectic:     q1 p1 ... qr pr | z1..zd
//   cosymplectic / precosymplectic: q1 p1 ... qr pr | z1..zd | t
//   k-(pre)symplectic:              y^1..y^n | block per alpha (y^alpha_mu, mu in I_alpha) | z1..zd
//   k-(pre)cosymplectic:            x^1..x^k | the k-(pre)symplectic layout
// omega^alpha = sum_{mu in I_alpha} e^{y^mu} ^ e^{y^alpha_mu}, eta^alpha = e^{x^alpha}.
struct CanonicalTemplate {
  TemplateKind kind = TemplateKind::symplectic;
  std::size_t k = 1;
  std::size_t n = 0;  // symplectic half-dimension, or number of base coordinates y^i
  std::size_t r = 0;  // rank/2 for the single-form kinds
  std::size_t d = 0;
  std::vector<std::vector<std::size_t>> index_sets;  // I_alpha, zero-based, increasing

  static CanonicalTemplate symplectic(std::size_t n);
  static CanonicalTemplate presymplectic(std::size_t r, std::size_t d);
  static CanonicalTemplate cosymplectic(std::size_t n);
  static CanonicalTemplate precosymplectic(std::size_t r, std::size_t d);
  static CanonicalTemplate k_symplectic(std::size_t k, std::size_t n);
  static CanonicalTemplate k_presymplectic(std::size_t n, std::vector<std::vector<std::size_t>> index_sets, std::size_t d);
  static CanonicalTemplate k_cosymplectic(std::size_t k, std::size_t n);
  static CanonicalTemplate k_precosymplectic(std::size_t n, std::vector<std::vector<std::size_t>> index_sets, std::size_t d);

  std::size_t dim() const;
  std::vector<std::size_t> r_alpha() const;
  std::vector<AltForm> etas() const;
  std::vector<AltForm> omegas() const;
  // Model polarisation blocks V_alpha and D (the k-kinds only).
  std::vector<Subspace> v_alpha() const;
  Subspace kernel_block() const;

  bool operator==(const CanonicalTemplate&) const = default;
};

struct Splitting {
  std::vector<Subspace> v_alpha;
  Subspace d;
};

struct DarbouxReport {
  Frame frame;
  CanonicalTemplate tmpl;
  std::vector<Vec> reeb;                 // Reeb vectors (particular solutions when not unique)
  std::optional<Subspace> reeb_freedom;  // homogeneous solutions of the Reeb system
  std::optional<Splitting> splitting;
  bool verified = false;
};

struct ReebSolution {
  std::vector<Vec> base;
  Subspace freedom;
};

// Solves i_{R_a} eta^b = delta_ab, i_{R_a} omega^b = 0. Throws StructureError when inconsistent.
ReebSolution reeb_solve(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas);

DarbouxReport symplectic_darboux(const AltForm& omega);
DarbouxReport presymplectic_darboux(const AltForm& omega);
DarbouxReport cosymplectic_darboux(const AltForm& eta, const AltForm& omega);
DarbouxReport precosymplectic_darboux(const AltForm& eta, const AltForm& omega);
DarbouxReport k_symplectic_darboux(const std::vector<AltForm>& omegas, const Subspace& V);
DarbouxReport k_presymplectic_darboux(const std::vector<AltForm>& omegas, const Subspace& V,
                                      const Splitting& splitting, const Mat& g);
DarbouxReport k_cosymplectic_darboux(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                     const Subspace& V);
DarbouxReport k_precosymplectic_darboux(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                        const Subspace& V, const Splitting& splitting, const Mat& g);

// Candidate splitting V = (+) V_alpha (+) D with D = intersection of the kernels and
// V_alpha the g-orthogonal complement of D in V cap (intersection of ker omega^beta, beta != alpha).
Splitting k_presymplectic_splitting(const std::vector<AltForm>& omegas, const Subspace& V, const Mat& g);

// Exact check that the frame carries the inputs onto the template forms.
bool certify(const Frame& frame, const CanonicalTemplate& tmpl, const std::vector<AltForm>& etas,
             const std::vector<AltForm>& omegas);

}  // namespace darboux
