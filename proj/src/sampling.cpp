#include "darboux/sampling.hpp"

namespace darboux {

Rat random_rat(std::mt19937_64& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-bound * den, bound * den);
  Rat r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

Mat random_invertible(std::mt19937_64& rng, std::size_t n, long bound, long max_den) {
  while (true) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rat(rng, bound, max_den);
    if (determinant(m) != 0) return m;
  }
}

StructureKind structure_kind_of(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::symplectic: return StructureKind::symplectic;
    case TemplateKind::presymplectic: return StructureKind::presymplectic;
    case TemplateKind::cosymplectic: return StructureKind::cosymplectic;
    case TemplateKind::precosymplectic: return StructureKind::precosymplectic;
    case TemplateKind::k_symplectic: return StructureKind::k_symplectic;
    case TemplateKind::k_presymplectic: return StructureKind::k_presymplectic;
    case TemplateKind::k_cosymplectic: return StructureKind::k_cosymplectic;
    case TemplateKind::k_precosymplectic: return StructureKind::k_precosymplectic;
  }
  return StructureKind::unknown;
}

StructureSpec template_spec(const CanonicalTemplate& t) {
  StructureSpec s;
  s.kind = structure_kind_of(t.kind);
  s.dim = t.dim();
  s.etas = t.etas();
  s.omegas = t.omegas();
  const auto blocks = t.v_alpha();
  if (!blocks.empty()) {
    std::vector<Vec> v;
    for (const auto& b : blocks) v.insert(v.end(), b.basis().begin(), b.basis().end());
    const Subspace D = t.kernel_block();
    v.insert(v.end(), D.basis().begin(), D.basis().end());
    s.V = Subspace::span(s.dim, v);
    if (t.kind == TemplateKind::k_presymplectic || t.kind == TemplateKind::k_precosymplectic) {
      s.splitting = Splitting{blocks, D};
      s.metric = Mat::identity(s.dim);
    }
  }
  return s;
}

Instance random_instance(const CanonicalTemplate& t, std::mt19937_64& rng) {
  Instance inst{t, random_invertible(rng, t.dim()), {}};
  inst.spec = template_spec(t).pulled_back(inst.L);
  if (inst.spec.metric) inst.spec.metric = Mat::identity(t.dim());
  return inst;
}

}  // namespace darboux
