#include "darboux/verifier.hpp"

#include <algorithm>
#include <functional>

namespace darboux {

namespace {

const char* kSympCite = "symplectic form: closed two-form with trivial kernel";
const char* kPresympCite = "presymplectic form: closed two-form of constant rank";
const char* kCosympCite = "cosymplectic structure: ker eta (+) ker omega = TM";
const char* kPrecosympCite = "precosymplectic structure: ker eta cap ker omega a regular distribution strictly inside ker omega";
const char* kKSympCite = "k-symplectic structure: rank-nk polarisation V, omega^alpha|VxV = 0, common kernel trivial";
const char* kKPresympCite = "k-presymplectic structure and its linear Darboux lemma (splitting V = (+)V_alpha (+) D)";
const char* kKCosympCite = "k-cosymplectic structure, clauses (1) and (2)";
const char* kKPrecosympCite = "k-precosymplectic structure, clauses 1-4";
const char* kMultiCite = "multisymplectic form: one-nondegenerate closed form";
const char* kStandardCite = "standard multisymplectic space: W with i_{u^v} Omega = 0 and Omega^# an isomorphism onto L^n(V/W)*";

class Builder {
 public:
  explicit Builder(StructureKind kind) { v_.kind = kind; }
  Builder& add(std::string name, std::string cite, bool pass, std::vector<Vec> witness = {}, std::string note = {}) {
    v_.clauses.push_back(Clause{std::move(name), std::move(cite), pass, pass ? std::vector<Vec>{} : std::move(witness),
                                std::move(note)});
    return *this;
  }
  Verdict& verdict() { return v_; }
  bool ok() const {
    return std::all_of(v_.clauses.begin(), v_.clauses.end(), [](const Clause& c) { return c.pass; });
  }
  Verdict finish() {
    v_.accepted = ok();
    return v_;
  }

 private:
  Verdict v_;
};

std::string alpha_note(std::size_t a) { return "alpha = " + std::to_string(a + 1); }

void require_degree(const AltForm& f, std::size_t degree, const char* what) {
  if (f.degree() != degree) throw InputError(std::string(what) + " must have degree " + std::to_string(degree));
}

std::size_t shared_dim(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas) {
  std::optional<std::size_t> dim;
  for (const auto* group : {&etas, &omegas})
    for (const auto& f : *group) {
      if (dim && *dim != f.dim()) throw InputError("forms live on spaces of different dimension");
      dim = f.dim();
    }
  if (!dim) throw InputError("no forms given");
  return *dim;
}

// Two basis vectors of V on which omega does not vanish.
std::vector<Vec> pair_witness(const AltForm& omega, const Subspace& V) {
  const auto& b = V.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (omega.evaluate({b[i], b[j]}) != 0) return {b[i], b[j]};
  return {};
}

std::vector<Vec> covector_witness(const AltForm& eta, const Subspace& V) {
  for (const auto& v : V.basis())
    if (eta.evaluate({v}) != 0) return {v};
  return {};
}

Subspace kernel_of(const std::vector<AltForm>& covectors, std::size_t N) {
  Subspace s = Subspace::full(N);
  for (const auto& e : covectors) s = intersect(s, one_kernel(e));
  return s;
}

Subspace common_kernel(const std::vector<AltForm>& omegas, std::size_t N) { return kernel_of(omegas, N); }

Subspace others_kernel(const std::vector<AltForm>& omegas, std::size_t skip, const Subspace& within) {
  Subspace s = within;
  for (std::size_t b = 0; b < omegas.size(); ++b)
    if (b != skip) s = intersect(s, one_kernel(omegas[b]));
  return s;
}

void check_declared(Builder& b, const StructureParams& declared, const StructureParams& computed, const char* cite,
                    const std::string& d_clause = "declared d") {
  auto scalar = [&](const std::optional<std::size_t>& want, const std::optional<std::size_t>& got,
                    const std::string& name) {
    if (!want) return;
    const bool ok = got && *got == *want;
    b.add(name, cite, ok, {},
          "declared " + std::to_string(*want) + ", computed " + (got ? std::to_string(*got) : std::string("none")));
  };
  scalar(declared.k, computed.k, "declared k");
  scalar(declared.n, computed.n, "declared n");
  scalar(declared.d, computed.d, d_clause);
  scalar(declared.degree, computed.degree, "declared degree");
  if (declared.r) b.add("declared r_alpha", cite, computed.r && *computed.r == *declared.r);
}

std::vector<std::size_t> half_ranks(const std::vector<AltForm>& omegas) {
  std::vector<std::size_t> r;
  for (const auto& w : omegas) r.push_back(rank(w.matrix()) / 2);
  return r;
}

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::symplectic: return "symplectic";
    case StructureKind::presymplectic: return "presymplectic";
    case StructureKind::cosymplectic: return "cosymplectic";
    case StructureKind::precosymplectic: return "precosymplectic";
    case StructureKind::k_symplectic: return "kSymplectic";
    case StructureKind::k_presymplectic: return "kPresymplectic";
    case StructureKind::k_cosymplectic: return "kCosymplectic";
    case StructureKind::k_precosymplectic: return "kPrecosymplectic";
    case StructureKind::multisymplectic: return "multisymplectic";
    case StructureKind::unknown: return "unknown";
  }
  return "unknown";
}

const std::vector<StructureKind>& all_structure_kinds() {
  static const std::vector<StructureKind> kinds = {
      StructureKind::symplectic,      StructureKind::presymplectic,   StructureKind::cosymplectic,
      StructureKind::precosymplectic, StructureKind::k_symplectic,    StructureKind::k_presymplectic,
      StructureKind::k_cosymplectic,  StructureKind::k_precosymplectic, StructureKind::multisymplectic};
  return kinds;
}

StructureKind parse_structure_kind(const std::string& name) {
  for (auto k : all_structure_kinds())
    if (to_string(k) == name) return k;
  if (name == "unknown") return StructureKind::unknown;
  throw InputError("unknown structure kind '" + name + "'");
}

const Clause* Verdict::find(const std::string& name) const {
  const Clause* first = nullptr;
  for (const auto& c : clauses) {
    if (c.name != name) continue;
    if (!c.pass) return &c;
    if (!first) first = &c;
  }
  return first;
}

const Clause* Verdict::first_failure() const {
  for (const auto& c : clauses)
    if (!c.pass) return &c;
  return nullptr;
}

StructureSpec StructureSpec::pulled_back(const Mat& L) const {
  StructureSpec out = *this;
  const Mat Li = inverse(L);
  auto move_sub = [&](const Subspace& s) {
    std::vector<Vec> vs;
    for (const auto& v : s.basis()) vs.push_back(Li * v);
    return Subspace::span(L.cols(), vs);
  };
  out.dim = L.cols();
  for (auto& e : out.etas) e = pullback(L, e);
  for (auto& w : out.omegas) w = pullback(L, w);
  if (out.big_omega) out.big_omega = pullback(L, *out.big_omega);
  if (out.V) out.V = move_sub(*out.V);
  if (out.splitting) {
    for (auto& s : out.splitting->v_alpha) s = move_sub(s);
    out.splitting->d = move_sub(out.splitting->d);
  }
  if (out.metric) out.metric = L.transpose() * (*out.metric) * L;
  return out;
}

Verdict check_symplectic(const AltForm& omega) {
  require_degree(omega, 2, "omega");
  Builder b(StructureKind::symplectic);
  const std::size_t N = omega.dim();
  b.add("even dimension", kSympCite, N % 2 == 0, {}, "dimension " + std::to_string(N));
  const Subspace ker = one_kernel(omega);
  b.add("ker omega = {0}", kSympCite, ker.is_zero(), ker.basis());
  if (N % 2 == 0) {
    b.verdict().params.n = N / 2;
    b.verdict().params.r = std::vector<std::size_t>{rank(omega.matrix()) / 2};
    b.verdict().params.d = ker.dim();
  }
  return b.finish();
}

Verdict check_presymplectic(const AltForm& omega, const StructureParams& declared) {
  require_degree(omega, 2, "omega");
  Builder b(StructureKind::presymplectic);
  const std::size_t r = rank(omega.matrix()) / 2;
  const std::size_t d = omega.dim() - 2 * r;
  b.add("rank omega = 2r", kPresympCite, true, {}, "r = " + std::to_string(r) + ", d = " + std::to_string(d));
  StructureParams p;
  p.r = std::vector<std::size_t>{r};
  p.d = d;
  check_declared(b, declared, p, kPresympCite);
  b.verdict().params = p;
  b.verdict().data["kernel"] = one_kernel(omega).basis();
  return b.finish();
}

Verdict check_cosymplectic(const AltForm& eta, const AltForm& omega) {
  require_degree(eta, 1, "eta");
  require_degree(omega, 2, "omega");
  const std::size_t N = shared_dim({eta}, {omega});
  Builder b(StructureKind::cosymplectic);
  b.add("eta nonzero", kCosympCite, !eta.is_zero());
  const Subspace ke = one_kernel(eta), kw = one_kernel(omega);
  const auto s = subspace_sum(ke, kw);
  const Subspace overlap = intersect(ke, kw);
  b.add("ker eta (+) ker omega = E", kCosympCite, s.is_direct && s.sum.dim() == N, overlap.basis(),
        "dim ker eta = " + std::to_string(ke.dim()) + ", dim ker omega = " + std::to_string(kw.dim()) +
            ", dim of sum = " + std::to_string(s.sum.dim()));
  if (b.ok()) {
    b.verdict().params.n = (N - 1) / 2;
    b.verdict().data["reeb"] = reeb_solve({eta}, {omega}).base;
  }
  return b.finish();
}

Verdict check_precosymplectic(const AltForm& eta, const AltForm& omega, const StructureParams& declared) {
  require_degree(eta, 1, "eta");
  require_degree(omega, 2, "omega");
  shared_dim({eta}, {omega});
  Builder b(StructureKind::precosymplectic);
  b.add("eta nonzero", kPrecosympCite, !eta.is_zero());
  const Subspace kw = one_kernel(omega);
  const Subspace D = intersect(one_kernel(eta), kw);
  b.add("ker eta cap ker omega strictly inside ker omega", kPrecosympCite, D.dim() < kw.dim(), kw.basis(),
        "ker omega is contained in ker eta");
  StructureParams p;
  p.r = std::vector<std::size_t>{rank(omega.matrix()) / 2};
  p.d = D.dim();
  check_declared(b, declared, p, kPrecosympCite);
  b.verdict().params = p;
  b.verdict().data["D"] = D.basis();
  if (b.ok()) {
    const auto reeb = reeb_solve({eta}, {omega});
    b.verdict().data["reeb"] = reeb.base;
    b.verdict().data["reeb_freedom"] = reeb.freedom.basis();
  }
  return b.finish();
}

Verdict check_k_symplectic(const std::vector<AltForm>& omegas, const std::optional<Subspace>& V,
                           const StructureParams& declared) {
  Builder b(StructureKind::k_symplectic);
  const std::size_t k = omegas.size();
  b.add("k >= 1", kKSympCite, k >= 1);
  if (k == 0) return b.finish();
  for (const auto& w : omegas) require_degree(w, 2, "omega^alpha");
  const std::size_t N = shared_dim({}, omegas);
  const std::size_t n = declared.n.value_or(N / (k + 1));
  b.add("dim = n(k+1)", kKSympCite, N == n * (k + 1),
        {}, "dimension " + std::to_string(N) + ", n = " + std::to_string(n) + ", k = " + std::to_string(k));
  b.add("polarisation given", kKSympCite, V.has_value());
  if (V) {
    if (V->ambient_dim() != N) throw InputError("V lives in a space of the wrong dimension");
    b.add("rank V = nk", kKSympCite, V->dim() == n * k, {}, "rank V = " + std::to_string(V->dim()));
    for (std::size_t a = 0; a < k; ++a)
      b.add("omega^alpha|VxV = 0", kKSympCite, vanishes_on(omegas[a], *V), pair_witness(omegas[a], *V),
            alpha_note(a));
  }
  const Subspace common = common_kernel(omegas, N);
  b.add("intersection of ker omega^alpha = {0}", kKSympCite, common.is_zero(), common.basis());
  StructureParams p;
  p.k = k;
  p.n = n;
  p.d = 0;
  p.r = std::vector<std::size_t>(k, n);
  StructureParams decl = declared;
  decl.n.reset();
  check_declared(b, decl, p, kKSympCite);
  b.verdict().params = p;
  if (b.ok()) {
    for (std::size_t a = 0; a < k; ++a) {
      const Subspace va = k == 1 ? *V : others_kernel(omegas, a, Subspace::full(N));
      b.verdict().data["V_" + std::to_string(a + 1)] = va.basis();
    }
  }
  return b.finish();
}

Verdict check_k_presymplectic(const std::vector<AltForm>& omegas, const std::optional<Subspace>& V,
                              const std::optional<Splitting>& splitting, const std::optional<Mat>& metric,
                              const StructureParams& declared) {
  Builder b(StructureKind::k_presymplectic);
  const std::size_t k = omegas.size();
  b.add("k >= 1", kKPresympCite, k >= 1);
  if (k == 0) return b.finish();
  for (const auto& w : omegas) require_degree(w, 2, "omega^alpha");
  const std::size_t N = shared_dim({}, omegas);
  const auto r_alpha = half_ranks(omegas);
  const std::size_t r = sum(r_alpha);
  const Subspace D = common_kernel(omegas, N);
  const std::size_t d = D.dim();
  const std::size_t n = N >= r + d ? N - r - d : 0;
  b.add("dim = n + r + d", kKPresympCite, N >= r + d, {},
        "dimension " + std::to_string(N) + ", r = " + std::to_string(r) + ", d = " + std::to_string(d));
  for (std::size_t a = 0; a < k; ++a)
    b.add("1 <= r_alpha <= n", kKPresympCite, r_alpha[a] >= 1 && r_alpha[a] <= n, {},
          alpha_note(a) + ": r_alpha = " + std::to_string(r_alpha[a]) + ", n = " + std::to_string(n));
  b.add("polarisation given", kKPresympCite, V.has_value());
  StructureParams p;
  p.k = k;
  p.n = n;
  p.d = d;
  p.r = r_alpha;
  b.verdict().params = p;
  if (!V) return b.finish();
  if (V->ambient_dim() != N) throw InputError("V lives in a space of the wrong dimension");
  for (std::size_t a = 0; a < k; ++a)
    b.add("omega^alpha|VxV = 0", kKPresympCite, vanishes_on(omegas[a], *V), pair_witness(omegas[a], *V),
          alpha_note(a));
  b.add("rank V = r + d", kKPresympCite, V->dim() == r + d, {}, "rank V = " + std::to_string(V->dim()));

  Splitting split;
  if (splitting) {
    split = *splitting;
    if (split.v_alpha.size() != k) throw InputError("splitting must list one V_alpha per form");
  } else {
    const Mat g = metric.value_or(Mat::identity(N));
    if (!is_symmetric_positive_definite(g)) {
      b.add("metric SPD", kKPresympCite, false);
      return b.finish();
    }
    split = k_presymplectic_splitting(omegas, *V, g);
    b.verdict().note = "splitting computed from the metric";
  }
  const Subspace D_in_V = intersect(D, *V);
  b.add("D inside V", kKPresympCite, D_in_V == D, D.basis());
  b.add("D = intersection of ker omega^alpha", kKPresympCite, split.d == D, split.d.basis());
  if (k != 1) {
    for (std::size_t a = 0; a < k; ++a) {
      const Subspace u = others_kernel(omegas, a, *V);
      b.add("kernel separation", kKPresympCite, u.dim() >= d + r_alpha[a], u.basis(),
            alpha_note(a) + ": V cap (ker omega^beta, beta != alpha) has rank " + std::to_string(u.dim()) +
                " = d + " + std::to_string(u.dim() >= d ? u.dim() - d : 0) + " < d + r_alpha; the kernels coincide");
      b.add("D + V_alpha = V cap ker(omega^beta, beta != alpha)", kKPresympCite,
            subspace_sum(split.d, split.v_alpha[a]).sum == u, u.basis(), alpha_note(a));
    }
  }
  std::vector<Vec> all = split.d.basis();
  for (std::size_t a = 0; a < k; ++a) {
    b.add("dim V_alpha = r_alpha", kKPresympCite, split.v_alpha[a].dim() == r_alpha[a], split.v_alpha[a].basis(),
          alpha_note(a) + ": dim V_alpha = " + std::to_string(split.v_alpha[a].dim()));
    all.insert(all.end(), split.v_alpha[a].basis().begin(), split.v_alpha[a].basis().end());
  }
  b.add("V = (+) V_alpha (+) D", kKPresympCite,
        Subspace::span(N, all).dim() == all.size() && Subspace::span(N, all) == *V);
  check_declared(b, declared, p, kKPresympCite);
  for (std::size_t a = 0; a < k; ++a) b.verdict().data["V_" + std::to_string(a + 1)] = split.v_alpha[a].basis();
  b.verdict().data["D"] = split.d.basis();
  return b.finish();
}

namespace {

void eta_clauses(Builder& b, const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                 const std::optional<Subspace>& V, std::size_t N, const char* cite) {
  std::vector<Vec> rows;
  for (const auto& e : etas) rows.push_back(e.as_vector());
  b.add("eta^1 ^ ... ^ eta^k != 0", cite, rank(Mat::from_rows(rows, N)) == etas.size());
  b.add("polarisation given", cite, V.has_value());
  if (!V) return;
  if (V->ambient_dim() != N) throw InputError("V lives in a space of the wrong dimension");
  for (std::size_t a = 0; a < etas.size(); ++a)
    b.add("eta^alpha|V = 0", cite, vanishes_on(etas[a], *V), covector_witness(etas[a], *V), alpha_note(a));
  for (std::size_t a = 0; a < omegas.size(); ++a)
    b.add("omega^alpha|VxV = 0", cite, vanishes_on(omegas[a], *V), pair_witness(omegas[a], *V), alpha_note(a));
}

}  // namespace

Verdict check_k_cosymplectic(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                             const std::optional<Subspace>& V, const StructureParams& declared) {
  Builder b(StructureKind::k_cosymplectic);
  const std::size_t k = omegas.size();
  b.add("k >= 1", kKCosympCite, k >= 1);
  b.add("as many eta^alpha as omega^alpha", kKCosympCite, etas.size() == k);
  if (!b.ok()) return b.finish();
  for (const auto& e : etas) require_degree(e, 1, "eta^alpha");
  for (const auto& w : omegas) require_degree(w, 2, "omega^alpha");
  const std::size_t N = shared_dim(etas, omegas);
  const std::size_t n = declared.n.value_or(N >= k ? (N - k) / (k + 1) : 0);
  b.add("dim = n(k+1) + k", kKCosympCite, N == n * (k + 1) + k, {},
        "dimension " + std::to_string(N) + ", n = " + std::to_string(n));
  eta_clauses(b, etas, omegas, V, N, kKCosympCite);
  if (V) b.add("rank V = nk", kKCosympCite, V->dim() == n * k, {}, "rank V = " + std::to_string(V->dim()));
  const Subspace common = common_kernel(omegas, N);
  const Subspace all = intersect(common, kernel_of(etas, N));
  b.add("intersection of (ker eta^alpha cap ker omega^alpha) = {0}", kKCosympCite, all.is_zero(), all.basis());
  b.add("rank of intersection of ker omega^alpha = k", kKCosympCite, common.dim() == k, common.basis(),
        "rank " + std::to_string(common.dim()));
  StructureParams p;
  p.k = k;
  p.n = n;
  p.d = 0;
  p.r = std::vector<std::size_t>(k, n);
  StructureParams decl = declared;
  decl.n.reset();
  check_declared(b, decl, p, kKCosympCite);
  b.verdict().params = p;
  if (b.ok()) b.verdict().data["reeb"] = reeb_solve(etas, omegas).base;
  return b.finish();
}

Verdict check_k_precosymplectic(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                const std::optional<Subspace>& V, const std::optional<Splitting>& splitting,
                                const StructureParams& declared) {
  Builder b(StructureKind::k_precosymplectic);
  const std::size_t k = omegas.size();
  b.add("k >= 1", kKPrecosympCite, k >= 1);
  b.add("as many eta^alpha as omega^alpha", kKPrecosympCite, etas.size() == k);
  if (!b.ok()) return b.finish();
  for (const auto& e : etas) require_degree(e, 1, "eta^alpha");
  for (const auto& w : omegas) require_degree(w, 2, "omega^alpha");
  const std::size_t N = shared_dim(etas, omegas);
  const auto r_alpha = half_ranks(omegas);
  const std::size_t r = sum(r_alpha);

  eta_clauses(b, etas, omegas, V, N, kKPrecosympCite);
  const Subspace common = common_kernel(omegas, N);
  const Subspace D = intersect(common, kernel_of(etas, N));
  const std::size_t d_computed = D.dim();
  const std::size_t d = declared.d.value_or(d_computed);
  b.add("rank of intersection of ker omega^alpha = k + d", kKPrecosympCite, common.dim() == k + d, common.basis(),
        "rank " + std::to_string(common.dim()) + ", k + d = " + std::to_string(k + d));
  b.add("rank of intersection of (ker omega^alpha cap ker eta^alpha) = d", kKPrecosympCite, d_computed == d,
        D.basis(), "rank " + std::to_string(d_computed) + ", d = " + std::to_string(d));

  const std::size_t n = V && N >= V->dim() + k ? N - V->dim() - k : 0;
  if (V)
    b.add("corank V = n + k", kKPrecosympCite, N >= V->dim() + k && N == n + r + d_computed + k, {},
          "dimension " + std::to_string(N) + ", rank V = " + std::to_string(V->dim()) + ", r = " + std::to_string(r));
  for (std::size_t a = 0; a < k; ++a)
    b.add("1 <= r_alpha <= n", kKPrecosympCite, r_alpha[a] >= 1 && r_alpha[a] <= n, {},
          alpha_note(a) + ": r_alpha = " + std::to_string(r_alpha[a]) + ", n = " + std::to_string(n));

  if (!splitting) {
    if (k != 1) b.add("splitting required", kKPrecosympCite, false, {}, "clause 4 needs V_alpha and D for k != 1");
  } else if (V) {
    const Splitting& s = *splitting;
    if (s.v_alpha.size() != k) throw InputError("splitting must list one V_alpha per form");
    b.add("D = intersection of (ker omega^alpha cap ker eta^alpha)", kKPrecosympCite, s.d == D, s.d.basis());
    std::vector<Vec> all = s.d.basis();
    for (std::size_t a = 0; a < k; ++a) {
      b.add("dim V_alpha = r_alpha", kKPrecosympCite, s.v_alpha[a].dim() == r_alpha[a], s.v_alpha[a].basis(),
            alpha_note(a));
      all.insert(all.end(), s.v_alpha[a].basis().begin(), s.v_alpha[a].basis().end());
      if (k != 1) {
        const Subspace u = others_kernel(omegas, a, *V);
        b.add("D + V_alpha = V cap ker(omega^beta, beta != alpha)", kKPrecosympCite,
              subspace_sum(s.d, s.v_alpha[a]).sum == u, u.basis(), alpha_note(a));
      }
    }
    b.add("V = (+) V_alpha (+) D", kKPrecosympCite,
          Subspace::span(N, all).dim() == all.size() && Subspace::span(N, all) == *V);
  }
  StructureParams p;
  p.k = k;
  p.n = n;
  p.d = d_computed;
  p.r = r_alpha;
  StructureParams decl = declared;
  decl.d.reset();
  check_declared(b, decl, p, kKPrecosympCite);
  b.verdict().params = p;
  b.verdict().data["D"] = D.basis();
  if (b.ok()) {
    const auto reeb = reeb_solve(etas, omegas);
    b.verdict().data["reeb"] = reeb.base;
    b.verdict().data["reeb_freedom"] = reeb.freedom.basis();
  }
  return b.finish();
}

Verdict check_multisymplectic(const AltForm& big_omega) {
  if (big_omega.degree() < 2) throw InputError("a multisymplectic form has degree at least 2");
  Builder b(StructureKind::multisymplectic);
  const Subspace ker = one_kernel(big_omega);
  b.add("one-nondegenerate", kMultiCite, ker.is_zero(), ker.basis(),
        "one-kernel has dimension " + std::to_string(ker.dim()));
  b.verdict().params.degree = big_omega.degree();
  b.verdict().params.d = ker.dim();
  b.verdict().data["kernel"] = ker.basis();
  b.verdict().note = ker.is_zero() ? "multisymplectic" : "premultisymplectic";
  return b.finish();
}

std::string to_string(IsotropyType t) {
  switch (t) {
    case IsotropyType::isotropic: return "isotropic";
    case IsotropyType::coisotropic: return "coisotropic";
    case IsotropyType::lagrangian: return "Lagrangian";
    case IsotropyType::none: return "none";
  }
  return "none";
}

IsotropyType isotropy_type(const Subspace& W, const AltForm& big_omega, std::size_t r) {
  const Subspace perp = r_orthogonal(W, big_omega, r);
  const bool iso = perp.contains(W);
  const bool co = W.contains(perp);
  if (iso && co) return IsotropyType::lagrangian;
  if (iso) return IsotropyType::isotropic;
  if (co) return IsotropyType::coisotropic;
  return IsotropyType::none;
}

namespace {

std::size_t binomial(std::size_t m, std::size_t n) {
  if (n > m) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = c * (m - n + i) / i;
  return c;
}

// Rank of w -> Omega(w, c_I) over the increasing n-tuples I of complement
// vectors; equal to dim W exactly when Omega^# is an isomorphism.
bool sharp_is_isomorphism(const AltForm& omega, const Subspace& W) {
  const std::size_t n = omega.degree() - 1;
  const auto comp = coordinate_complement(W);
  const auto tuples = increasing_tuples(comp.size(), n);
  if (tuples.size() != W.dim()) return false;
  std::vector<Vec> rows;
  for (const auto& w : W.basis()) {
    Vec row;
    for (const auto& t : tuples) {
      std::vector<Vec> args{w};
      for (auto i : t) args.push_back(comp[i]);
      row.push_back(omega.evaluate(args));
    }
    rows.push_back(std::move(row));
  }
  return rank(Mat::from_rows(rows, tuples.size())) == W.dim();
}

}  // namespace

Verdict check_standard_nplectic(const AltForm& big_omega) {
  if (big_omega.degree() < 3)
    throw InputError("standard multisymplectic check needs degree at least 3 (W is not unique for two-forms)");
  Builder b(StructureKind::multisymplectic);
  const std::size_t N = big_omega.dim();
  const std::size_t n = big_omega.degree() - 1;
  const Subspace ker = one_kernel(big_omega);
  b.add("one-nondegenerate", kStandardCite, ker.is_zero(), ker.basis());
  std::optional<std::size_t> m;
  for (std::size_t c = 0; c <= N; ++c)
    if (c + binomial(c, n) == N) m = c;
  b.add("dim = m + C(m, n)", kStandardCite, m.has_value(), {}, "dimension " + std::to_string(N));
  b.verdict().params.degree = big_omega.degree();
  if (!b.ok()) {
    b.verdict().note = "not standard";
    return b.finish();
  }
  const std::size_t target = binomial(*m, n);

  // Depth-first search over echelon vectors of W^{perp,1}, highest index first.
  std::optional<Subspace> found;
  std::size_t budget = 20000;
  std::function<void(const Subspace&)> dfs = [&](const Subspace& W) {
    if (found || budget == 0) return;
    --budget;
    if (W.dim() == target) {
      if (sharp_is_isomorphism(big_omega, W)) found = W;
      return;
    }
    const Subspace perp = r_orthogonal(W, big_omega, 1);
    const auto& cand = perp.basis();
    for (std::size_t i = cand.size(); i-- > 0 && !found;) {
      if (W.contains(cand[i])) continue;
      std::vector<Vec> next = W.basis();
      next.push_back(cand[i]);
      const Subspace W2 = Subspace::span(N, next);
      if (!r_orthogonal(W2, big_omega, 1).contains(W2)) continue;
      dfs(W2);
    }
  };
  dfs(Subspace(N));
  b.add("isotropic W with Omega^# an isomorphism", kStandardCite, found.has_value(), {},
        found ? "dim W = " + std::to_string(target) : "no candidate W in the searched family");
  if (found) b.verdict().data["W"] = found->basis();
  b.verdict().note = found ? "standard" : "not standard";
  return b.finish();
}

namespace {

bool signature_fits(StructureKind kind, const StructureSpec& s) {
  const std::size_t ne = s.etas.size(), nw = s.omegas.size();
  switch (kind) {
    case StructureKind::symplectic:
    case StructureKind::presymplectic: return ne == 0 && nw == 1 && !s.big_omega;
    case StructureKind::cosymplectic:
    case StructureKind::precosymplectic: return ne == 1 && nw == 1 && !s.big_omega;
    case StructureKind::k_symplectic:
    case StructureKind::k_presymplectic: return ne == 0 && nw >= 1 && !s.big_omega;
    case StructureKind::k_cosymplectic:
    case StructureKind::k_precosymplectic: return ne >= 1 && nw == ne && !s.big_omega;
    case StructureKind::multisymplectic: return s.big_omega || (ne == 0 && nw == 1);
    case StructureKind::unknown: return false;
  }
  return false;
}

}  // namespace

Verdict check(StructureKind kind, const StructureSpec& spec) {
  if (!signature_fits(kind, spec)) {
    Builder b(kind);
    b.add("form signature", "forms required by the " + to_string(kind) + " definition", false, {},
          std::to_string(spec.etas.size()) + " one-forms, " + std::to_string(spec.omegas.size()) + " two-forms" +
              (spec.big_omega ? ", one multisymplectic form" : ""));
    return b.finish();
  }
  const auto& d = spec.declared;
  switch (kind) {
    case StructureKind::symplectic: {
      Verdict v = check_symplectic(spec.omegas[0]);
      if (d.n && (!v.params.n || *d.n != *v.params.n)) {
        v.clauses.push_back(Clause{"declared n", kSympCite, false, {}, ""});
        v.accepted = false;
      }
      return v;
    }
    case StructureKind::presymplectic: return check_presymplectic(spec.omegas[0], d);
    case StructureKind::cosymplectic: {
      Verdict v = check_cosymplectic(spec.etas[0], spec.omegas[0]);
      if (d.n && (!v.params.n || *d.n != *v.params.n)) {
        v.clauses.push_back(Clause{"declared n", kCosympCite, false, {}, ""});
        v.accepted = false;
      }
      return v;
    }
    case StructureKind::precosymplectic: return check_precosymplectic(spec.etas[0], spec.omegas[0], d);
    case StructureKind::k_symplectic: return check_k_symplectic(spec.omegas, spec.V, d);
    case StructureKind::k_presymplectic:
      return check_k_presymplectic(spec.omegas, spec.V, spec.splitting, spec.metric, d);
    case StructureKind::k_cosymplectic: return check_k_cosymplectic(spec.etas, spec.omegas, spec.V, d);
    case StructureKind::k_precosymplectic:
      return check_k_precosymplectic(spec.etas, spec.omegas, spec.V, spec.splitting, d);
    case StructureKind::multisymplectic:
      return check_multisymplectic(spec.big_omega ? *spec.big_omega : spec.omegas[0]);
    case StructureKind::unknown: break;
  }
  throw InputError("cannot check the unknown kind directly");
}

Classification classify(const StructureSpec& spec) {
  Classification out;
  // declared parameters belong to the declared kind only
  StructureSpec bare = spec;
  bare.declared = {};
  for (auto kind : all_structure_kinds()) {
    out.verdicts.push_back(check(kind, kind == spec.kind ? spec : bare));
    if (out.verdicts.back().accepted) out.accepted.push_back(kind);
  }
  if (spec.big_omega && spec.big_omega->degree() >= 3) out.standard = check_standard_nplectic(*spec.big_omega);
  return out;
}

}  // namespace darboux

namespace darboux {

DarbouxReport normal_form(const StructureSpec& spec) {
  if (spec.kind == StructureKind::unknown || spec.kind == StructureKind::multisymplectic)
    throw InputError("normal forms need one of the (k-)(pre)(co)symplectic kinds");
  if (!signature_fits(spec.kind, spec))
    throw StructureError("form signature", "the forms given do not match the " + to_string(spec.kind) + " kind");
  auto need_v = [&]() -> const Subspace& {
    if (!spec.V) throw StructureError("polarisation given", "this kind needs a polarisation V");
    return *spec.V;
  };
  const Mat g = spec.metric.value_or(Mat::identity(spec.omegas.front().dim()));
  switch (spec.kind) {
    case StructureKind::symplectic: return symplectic_darboux(spec.omegas[0]);
    case StructureKind::presymplectic: return presymplectic_darboux(spec.omegas[0]);
    case StructureKind::cosymplectic: return cosymplectic_darboux(spec.etas[0], spec.omegas[0]);
    case StructureKind::precosymplectic: return precosymplectic_darboux(spec.etas[0], spec.omegas[0]);
    case StructureKind::k_symplectic: return k_symplectic_darboux(spec.omegas, need_v());
    case StructureKind::k_presymplectic: {
      const Subspace& V = need_v();
      if (!is_symmetric_positive_definite(g)) throw StructureError("metric SPD", "metric is not positive definite");
      const Splitting s = spec.splitting ? *spec.splitting : k_presymplectic_splitting(spec.omegas, V, g);
      return k_presymplectic_darboux(spec.omegas, V, s, g);
    }
    case StructureKind::k_cosymplectic: return k_cosymplectic_darboux(spec.etas, spec.omegas, need_v());
    case StructureKind::k_precosymplectic: {
      const Subspace& V = need_v();
      if (!is_symmetric_positive_definite(g)) throw StructureError("metric SPD", "metric is not positive definite");
      Splitting s;
      if (spec.splitting) {
        s = *spec.splitting;
      } else {
        const std::size_t N = g.rows();
        s.d = intersect(intersect(common_kernel(spec.omegas, N), kernel_of(spec.etas, N)), V);
        for (std::size_t a = 0; a < spec.omegas.size(); ++a) {
          const Subspace u = spec.omegas.size() == 1 ? V : others_kernel(spec.omegas, a, V);
          s.v_alpha.push_back(relative_complement(u, s.d, g));
        }
      }
      return k_precosymplectic_darboux(spec.etas, spec.omegas, V, s, g);
    }
    default: break;
  }
  throw InputError("unsupported kind");
}

}  // namespace darboux
