#include "darboux/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace darboux {

std::string to_string(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::symplectic: return "symplectic";
    case TemplateKind::presymplectic: return "presymplectic";
    case TemplateKind::cosymplectic: return "cosymplectic";
    case TemplateKind::precosymplectic: return "precosymplectic";
    case TemplateKind::k_symplectic: return "kSymplectic";
    case TemplateKind::k_presymplectic: return "kPresymplectic";
    case TemplateKind::k_cosymplectic: return "kCosymplectic";
    case TemplateKind::k_precosymplectic: return "kPrecosymplectic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Templates

namespace {

std::vector<std::size_t> iota_set(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool is_k_kind(TemplateKind kind) {
  return kind == TemplateKind::k_symplectic || kind == TemplateKind::k_presymplectic ||
         kind == TemplateKind::k_cosymplectic || kind == TemplateKind::k_precosymplectic;
}

bool has_reeb_block(TemplateKind kind) {
  return kind == TemplateKind::k_cosymplectic || kind == TemplateKind::k_precosymplectic;
}

void check_index_sets(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.empty()) throw StructureError("k >= 1", "a k-structure needs at least one form (k = 0 rejected)");
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n) throw InputError("index set entry exceeds n");
      if (i > 0 && s[i] <= s[i - 1]) throw InputError("index sets must be strictly increasing");
    }
  }
}

}  // namespace

CanonicalTemplate CanonicalTemplate::symplectic(std::size_t n) {
  CanonicalTemplate t;
  t.kind = TemplateKind::symplectic;
  t.n = n;
  t.r = n;
  return t;
}

CanonicalTemplate CanonicalTemplate::presymplectic(std::size_t r, std::size_t d) {
  CanonicalTemplate t;
  t.kind = TemplateKind::presymplectic;
  t.r = r;
  t.d = d;
  return t;
}

CanonicalTemplate CanonicalTemplate::cosymplectic(std::size_t n) {
  CanonicalTemplate t;
  t.kind = TemplateKind::cosymplectic;
  t.n = n;
  t.r = n;
  return t;
}

CanonicalTemplate CanonicalTemplate::precosymplectic(std::size_t r, std::size_t d) {
  CanonicalTemplate t;
  t.kind = TemplateKind::precosymplectic;
  t.r = r;
  t.d = d;
  return t;
}

CanonicalTemplate CanonicalTemplate::k_symplectic(std::size_t k, std::size_t n) {
  if (k == 0) throw StructureError("k >= 1", "k = 0 is not a k-symplectic family");
  CanonicalTemplate t;
  t.kind = TemplateKind::k_symplectic;
  t.k = k;
  t.n = n;
  t.index_sets.assign(k, iota_set(n));
  return t;
}

CanonicalTemplate CanonicalTemplate::k_presymplectic(std::size_t n, std::vector<std::vector<std::size_t>> index_sets,
                                                     std::size_t d) {
  check_index_sets(n, index_sets);
  CanonicalTemplate t;
  t.kind = TemplateKind::k_presymplectic;
  t.k = index_sets.size();
  t.n = n;
  t.d = d;
  t.index_sets = std::move(index_sets);
  return t;
}

CanonicalTemplate CanonicalTemplate::k_cosymplectic(std::size_t k, std::size_t n) {
  CanonicalTemplate t = k_symplectic(k, n);
  t.kind = TemplateKind::k_cosymplectic;
  return t;
}

CanonicalTemplate CanonicalTemplate::k_precosymplectic(std::size_t n, std::vector<std::vector<std::size_t>> index_sets,
                                                       std::size_t d) {
  CanonicalTemplate t = k_presymplectic(n, std::move(index_sets), d);
  t.kind = TemplateKind::k_precosymplectic;
  return t;
}

std::vector<std::size_t> CanonicalTemplate::r_alpha() const {
  std::vector<std::size_t> out;
  for (const auto& s : index_sets) out.push_back(s.size());
  return out;
}

std::size_t CanonicalTemplate::dim() const {
  switch (kind) {
    case TemplateKind::symplectic: return 2 * n;
    case TemplateKind::presymplectic: return 2 * r + d;
    case TemplateKind::cosymplectic: return 2 * n + 1;
    case TemplateKind::precosymplectic: return 2 * r + d + 1;
    default: break;
  }
  std::size_t total = n + d + (has_reeb_block(kind) ? k : 0);
  for (const auto& s : index_sets) total += s.size();
  return total;
}

std::vector<AltForm> CanonicalTemplate::etas() const {
  const std::size_t N = dim();
  std::vector<AltForm> out;
  if (kind == TemplateKind::cosymplectic || kind == TemplateKind::precosymplectic) {
    out.push_back(AltForm::basis_covector(N, N - 1));
  } else if (has_reeb_block(kind)) {
    for (std::size_t a = 0; a < k; ++a) out.push_back(AltForm::basis_covector(N, a));
  }
  return out;
}

std::vector<AltForm> CanonicalTemplate::omegas() const {
  const std::size_t N = dim();
  std::vector<AltForm> out;
  if (!is_k_kind(kind)) {
    AltForm w(N, 2);
    for (std::size_t i = 0; i < r; ++i) w.add({2 * i, 2 * i + 1}, Rat(1));
    out.push_back(std::move(w));
    return out;
  }
  const std::size_t offset = has_reeb_block(kind) ? k : 0;
  std::size_t block = offset + n;
  for (const auto& set : index_sets) {
    AltForm w(N, 2);
    for (std::size_t j = 0; j < set.size(); ++j) w.add({offset + set[j], block + j}, Rat(1));
    block += set.size();
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Subspace> CanonicalTemplate::v_alpha() const {
  std::vector<Subspace> out;
  if (!is_k_kind(kind)) return out;
  const std::size_t N = dim();
  std::size_t block = (has_reeb_block(kind) ? k : 0) + n;
  for (const auto& set : index_sets) {
    std::vector<Vec> vs;
    for (std::size_t j = 0; j < set.size(); ++j) vs.push_back(unit_vec(N, block + j));
    block += set.size();
    out.push_back(Subspace::span(N, vs));
  }
  return out;
}

Subspace CanonicalTemplate::kernel_block() const {
  const std::size_t N = dim();
  std::size_t first = 0;
  switch (kind) {
    case TemplateKind::symplectic:
    case TemplateKind::presymplectic:
    case TemplateKind::cosymplectic:
    case TemplateKind::precosymplectic: first = 2 * r; break;
    default: first = N - d; break;
  }
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < d; ++j) vs.push_back(unit_vec(N, first + j));
  return Subspace::span(N, vs);
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

std::size_t common_dim(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas) {
  std::optional<std::size_t> dim;
  auto take = [&](const AltForm& f, std::size_t degree, const char* what) {
    if (f.degree() != degree) throw InputError(std::string(what) + " has the wrong degree");
    if (dim && *dim != f.dim()) throw InputError("forms live on spaces of different dimension");
    dim = f.dim();
  };
  for (const auto& e : etas) take(e, 1, "eta");
  for (const auto& w : omegas) take(w, 2, "omega");
  if (!dim) throw InputError("no forms given");
  return *dim;
}

Subspace kernel_of_covectors(const std::vector<AltForm>& etas, std::size_t N) {
  std::vector<Vec> rows;
  for (const auto& e : etas) rows.push_back(e.as_vector());
  if (rows.empty()) return Subspace::full(N);
  return kernel_basis(Mat::from_rows(rows, N));
}

Subspace common_kernel(const std::vector<AltForm>& omegas, std::size_t N) {
  Subspace s = Subspace::full(N);
  for (const auto& w : omegas) s = intersect(s, one_kernel(w));
  return s;
}

Rat pair(const Mat& a, const Vec& x, const Vec& y) { return dot(x, a * y); }

// Symplectic Gram-Schmidt on `work`. Appends (u, v) pairs with omega(u, v) = 1
// to `pairs`; the vectors left over span the kernel of omega on span(work).
void skew_gram_schmidt(const AltForm& omega, std::vector<Vec> work, std::vector<Vec>& pairs,
                       std::vector<Vec>& rest) {
  const Mat a = omega.matrix();
  while (true) {
    std::size_t pi = work.size(), pj = work.size();
    Rat val = 0;
    for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        val = pair(a, work[i], work[j]);
        if (val != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == work.size()) break;
    Vec u = work[pi];
    Vec v = (Rat(1) / val) * work[pj];
    std::vector<Vec> next;
    for (std::size_t t = 0; t < work.size(); ++t) {
      if (t == pi || t == pj) continue;
      const Vec& w = work[t];
      next.push_back(w - pair(a, w, v) * u + pair(a, w, u) * v);
    }
    pairs.push_back(std::move(u));
    pairs.push_back(std::move(v));
    work = std::move(next);
  }
  rest = std::move(work);
}

std::vector<Vec> standard_basis(std::size_t N) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < N; ++i) out.push_back(unit_vec(N, i));
  return out;
}

DarbouxReport finish(std::vector<Vec> columns, CanonicalTemplate tmpl, const std::vector<AltForm>& etas,
                     const std::vector<AltForm>& omegas) {
  const std::size_t N = tmpl.dim();
  if (columns.size() != N) throw std::logic_error("normal form produced the wrong number of frame vectors");
  DarbouxReport rep{Frame(Mat::from_columns(columns, N)), std::move(tmpl), {}, std::nullopt, std::nullopt, false};
  rep.verified = certify(rep.frame, rep.tmpl, etas, omegas);
  if (!rep.verified) throw std::logic_error("normal form certificate failed: frame does not realise the template");
  return rep;
}

std::size_t pivot_of(const Vec& v) {
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  return p;
}

// Basis of X adapted to every S_alpha: each S_alpha is spanned by a subset of
// it. Pieces are built from the intersection lattice, highest intersections
// first, taking metric complements at every step. Fails when the lattice is
// not distributive (possible for three or more subspaces).
std::vector<Vec> adapted_basis(const Subspace& X, const std::vector<Subspace>& S, const Mat& h) {
  const std::size_t k = S.size();
  const std::size_t N = X.ambient_dim();
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<Subspace> P(subsets, X);
  for (std::size_t T = 1; T < subsets; ++T)
    for (std::size_t a = 0; a < k; ++a)
      if (T & (std::size_t{1} << a)) P[T] = intersect(P[T], S[a]);

  std::vector<std::size_t> order(subsets);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [](std::size_t x, std::size_t y) {
    return __builtin_popcountll(x) > __builtin_popcountll(y);
  });

  std::vector<Vec> pieces;
  std::vector<Subspace> atoms(subsets, Subspace(N));
  for (std::size_t T : order) {
    Subspace above(N);
    for (std::size_t U = 0; U < subsets; ++U)
      if (U != T && (U & T) == T && T != 0) above = subspace_sum(above, P[U]).sum;
    if (T == 0)
      for (std::size_t U = 1; U < subsets; ++U) above = subspace_sum(above, P[U]).sum;
    atoms[T] = relative_complement(P[T], above, h);
    pieces.insert(pieces.end(), atoms[T].basis().begin(), atoms[T].basis().end());
  }
  const bool independent = Subspace::span(N, pieces).dim() == pieces.size();
  bool spans_each = pieces.size() == X.dim();
  for (std::size_t a = 0; a < k && spans_each; ++a) {
    std::size_t count = 0;
    for (std::size_t T = 0; T < subsets; ++T)
      if (T & (std::size_t{1} << a)) count += atoms[T].dim();
    spans_each = count == S[a].dim();
  }
  if (!independent || !spans_each)
    throw StructureError("common adapted basis",
                         "the images omega^alpha(V_alpha) admit no common adapted basis of the annihilator of V");
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Vec& x, const Vec& y) { return pivot_of(x) < pivot_of(y); });
  return pieces;
}

// Builds the frame u_1..u_n | f_alpha^mu | D for data already known to satisfy
// the k-presymplectic hypotheses. `complement` spans a complement of V and
// `covectors` is a basis of the annihilator of V adapted to the images.
std::vector<Vec> assemble_k_frame(const std::vector<AltForm>& omegas, const std::vector<Subspace>& v_alpha,
                                  const Subspace& D, const std::vector<Vec>& complement,
                                  const std::vector<Vec>& covectors,
                                  std::vector<std::vector<std::size_t>>& index_sets) {
  const std::size_t k = omegas.size();
  const std::size_t N = omegas.front().dim();
  const std::size_t n = covectors.size();
  if (complement.size() != n) throw std::logic_error("complement of V has the wrong dimension");

  index_sets.assign(k, {});
  std::vector<std::vector<Vec>> f(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Vec> images;
    for (const auto& b : v_alpha[a].basis()) images.push_back(interior(b, omegas[a]).as_vector());
    const Subspace image = Subspace::span(N, images);
    Mat sys = Mat::from_columns(images, N);
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (!image.contains(covectors[mu])) continue;
      Vec c;
      if (!solve_particular(sys, Rat(-1) * covectors[mu], c))
        throw std::logic_error("adapted covector outside omega(V_alpha)");
      Vec fv = zero_vec(N);
      for (std::size_t j = 0; j < c.size(); ++j) fv = fv + c[j] * v_alpha[a].basis()[j];
      index_sets[a].push_back(mu);
      f[a].push_back(std::move(fv));
    }
    if (f[a].size() != v_alpha[a].dim())
      throw StructureError("dim V_alpha = r_alpha", "omega^alpha(V_alpha) is not spanned by adapted covectors");
  }

  // u_j in span(complement) dual to the covectors.
  Mat W = Mat::from_columns(complement, N);
  Mat E = Mat::from_rows(covectors, N);
  Mat U = W * inverse(E * W);
  std::vector<Vec> u = U.columns();

  std::vector<Vec> corrected = u;
  for (std::size_t a = 0; a < k; ++a) {
    const Mat m = omegas[a].matrix();
    const auto& I = index_sets[a];
    for (std::size_t i = 0; i < n; ++i) {
      const bool i_in = std::binary_search(I.begin(), I.end(), i);
      for (std::size_t t = 0; t < I.size(); ++t) {
        Rat c = pair(m, u[i], u[I[t]]);
        if (c == 0) continue;
        if (i_in) c /= 2;
        corrected[i] = corrected[i] + c * f[a][t];
      }
    }
  }

  std::vector<Vec> columns = corrected;
  for (std::size_t a = 0; a < k; ++a) columns.insert(columns.end(), f[a].begin(), f[a].end());
  columns.insert(columns.end(), D.basis().begin(), D.basis().end());
  return columns;
}

void require(bool ok, const char* clause, const std::string& message) {
  if (!ok) throw StructureError(clause, message);
}

Subspace embed(const Mat& basis_cols, const Subspace& s_local) {
  std::vector<Vec> out;
  for (const auto& v : s_local.basis()) out.push_back(basis_cols * v);
  return Subspace::span(basis_cols.rows(), out);
}

Subspace localize(const Subspace& K, const Subspace& s) {
  std::vector<Vec> out;
  for (const auto& v : s.basis()) out.push_back(coordinates_in(K.basis(), v));
  return Subspace::span(K.dim(), out);
}

}  // namespace

bool certify(const Frame& frame, const CanonicalTemplate& tmpl, const std::vector<AltForm>& etas,
             const std::vector<AltForm>& omegas) {
  if (frame.dim() != tmpl.dim()) return false;
  const auto te = tmpl.etas();
  const auto tw = tmpl.omegas();
  if (te.size() != etas.size() || tw.size() != omegas.size()) return false;
  for (std::size_t i = 0; i < te.size(); ++i)
    if (frame.express(etas[i]) != te[i]) return false;
  for (std::size_t i = 0; i < tw.size(); ++i)
    if (frame.express(omegas[i]) != tw[i]) return false;
  return true;
}

ReebSolution reeb_solve(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas) {
  const std::size_t N = common_dim(etas, omegas);
  std::vector<Vec> rows;
  for (const auto& e : etas) rows.push_back(e.as_vector());
  for (const auto& w : omegas) {
    const Mat m = w.matrix();
    for (std::size_t i = 0; i < N; ++i) rows.push_back(m.row(i));
  }
  ReebSolution out;
  if (rows.empty()) {
    out.freedom = Subspace::full(N);
    return out;
  }
  const Mat A = Mat::from_rows(rows, N);
  for (std::size_t a = 0; a < etas.size(); ++a) {
    Vec b = zero_vec(rows.size());
    b[a] = 1;
    Vec x;
    if (!solve_particular(A, b, x))
      throw StructureError("Reeb system consistent",
                           "no vector R satisfies i_R eta^beta = delta and i_R omega^beta = 0 for alpha = " +
                               std::to_string(a + 1));
    out.base.push_back(std::move(x));
  }
  out.freedom = kernel_basis(A);
  return out;
}

DarbouxReport symplectic_darboux(const AltForm& omega) {
  const std::size_t N = common_dim({}, {omega});
  require(N % 2 == 0, "even dimension", "a symplectic form needs an even-dimensional space");
  require(one_kernel(omega).is_zero(), "nondegenerate", "omega has a nontrivial kernel");
  std::vector<Vec> pairs, rest;
  skew_gram_schmidt(omega, standard_basis(N), pairs, rest);
  return finish(pairs, CanonicalTemplate::symplectic(N / 2), {}, {omega});
}

DarbouxReport presymplectic_darboux(const AltForm& omega) {
  const std::size_t N = common_dim({}, {omega});
  std::vector<Vec> pairs, rest;
  skew_gram_schmidt(omega, standard_basis(N), pairs, rest);
  const std::size_t r = pairs.size() / 2, d = rest.size();
  std::vector<Vec> cols = pairs;
  cols.insert(cols.end(), rest.begin(), rest.end());
  auto rep = finish(cols, CanonicalTemplate::presymplectic(r, d), {}, {omega});
  rep.splitting = Splitting{{}, one_kernel(omega)};
  return rep;
}

DarbouxReport cosymplectic_darboux(const AltForm& eta, const AltForm& omega) {
  const std::size_t N = common_dim({eta}, {omega});
  require(!eta.is_zero(), "eta nonzero", "eta vanishes");
  const Subspace ker_eta = kernel_of_covectors({eta}, N);
  const auto sum = subspace_sum(ker_eta, one_kernel(omega));
  require(sum.is_direct && sum.sum.dim() == N, "ker eta (+) ker omega = E",
          "ker eta and ker omega are not complementary (eta ^ omega^n = 0)");
  const auto reeb = reeb_solve({eta}, {omega});
  std::vector<Vec> pairs, rest;
  skew_gram_schmidt(omega, ker_eta.basis(), pairs, rest);
  if (!rest.empty()) throw std::logic_error("cosymplectic: omega degenerate on ker eta");
  std::vector<Vec> cols = pairs;
  cols.push_back(reeb.base[0]);
  auto rep = finish(cols, CanonicalTemplate::cosymplectic(pairs.size() / 2), {eta}, {omega});
  rep.reeb = reeb.base;
  rep.reeb_freedom = reeb.freedom;
  return rep;
}

DarbouxReport precosymplectic_darboux(const AltForm& eta, const AltForm& omega) {
  const std::size_t N = common_dim({eta}, {omega});
  require(!eta.is_zero(), "eta nonzero", "eta vanishes");
  const Subspace ker_eta = kernel_of_covectors({eta}, N);
  const Subspace ker_omega = one_kernel(omega);
  const Subspace D = intersect(ker_eta, ker_omega);
  require(D.dim() < ker_omega.dim(), "ker eta cap ker omega strictly inside ker omega",
          "ker omega is contained in ker eta");
  const auto reeb = reeb_solve({eta}, {omega});
  std::vector<Vec> pairs, rest;
  skew_gram_schmidt(omega, ker_eta.basis(), pairs, rest);
  std::vector<Vec> cols = pairs;
  cols.insert(cols.end(), rest.begin(), rest.end());
  cols.push_back(reeb.base[0]);
  auto rep = finish(cols, CanonicalTemplate::precosymplectic(pairs.size() / 2, rest.size()), {eta}, {omega});
  rep.reeb = reeb.base;
  rep.reeb_freedom = reeb.freedom;
  rep.splitting = Splitting{{}, D};
  return rep;
}

DarbouxReport k_symplectic_darboux(const std::vector<AltForm>& omegas, const Subspace& V) {
  require(!omegas.empty(), "k >= 1", "k = 0 is not a k-symplectic family");
  const std::size_t N = common_dim({}, omegas);
  const std::size_t k = omegas.size();
  if (V.ambient_dim() != N) throw InputError("polarisation lives in a space of the wrong dimension");
  require(N % (k + 1) == 0, "dim = n(k+1)", "dimension is not a multiple of k + 1");
  const std::size_t n = N / (k + 1);
  require(V.dim() == n * k, "rank V = nk", "V has rank " + std::to_string(V.dim()) + ", expected " +
                                                std::to_string(n * k));
  for (std::size_t a = 0; a < k; ++a)
    require(vanishes_on(omegas[a], V), "omega^alpha|VxV = 0",
            "omega^" + std::to_string(a + 1) + " does not vanish on V");
  require(common_kernel(omegas, N).is_zero(), "intersection of ker omega^alpha = {0}",
          "the kernels of the omega^alpha have a common nonzero vector");

  std::vector<Subspace> v_alpha;
  if (k == 1) {
    v_alpha.push_back(V);
  } else {
    for (std::size_t a = 0; a < k; ++a) {
      Subspace s = Subspace::full(N);
      for (std::size_t b = 0; b < k; ++b)
        if (b != a) s = intersect(s, one_kernel(omegas[b]));
      v_alpha.push_back(std::move(s));
    }
  }
  std::vector<Vec> all;
  for (const auto& s : v_alpha) {
    require(s.dim() == n && V.contains(s), "V_alpha of rank n inside V", "V_alpha has the wrong rank");
    all.insert(all.end(), s.basis().begin(), s.basis().end());
  }
  require(Subspace::span(N, all) == V, "V = (+) V_alpha", "the V_alpha do not decompose V");

  std::vector<std::vector<std::size_t>> index_sets;
  const auto cols = assemble_k_frame(omegas, v_alpha, Subspace(N), coordinate_complement(V),
                                     annihilator(V).basis(), index_sets);
  auto rep = finish(cols, CanonicalTemplate::k_symplectic(k, n), {}, omegas);
  rep.splitting = Splitting{v_alpha, Subspace(N)};
  return rep;
}

Splitting k_presymplectic_splitting(const std::vector<AltForm>& omegas, const Subspace& V, const Mat& g) {
  require(!omegas.empty(), "k >= 1", "k = 0 is not a k-presymplectic family");
  const std::size_t N = common_dim({}, omegas);
  const std::size_t k = omegas.size();
  Splitting s;
  s.d = intersect(common_kernel(omegas, N), V);
  for (std::size_t a = 0; a < k; ++a) {
    Subspace u = V;
    if (k > 1)
      for (std::size_t b = 0; b < k; ++b)
        if (b != a) u = intersect(u, one_kernel(omegas[b]));
    s.v_alpha.push_back(relative_complement(u, s.d, g));
  }
  return s;
}

DarbouxReport k_presymplectic_darboux(const std::vector<AltForm>& omegas, const Subspace& V,
                                      const Splitting& splitting, const Mat& g) {
  require(!omegas.empty(), "k >= 1", "k = 0 is not a k-presymplectic family");
  const std::size_t N = common_dim({}, omegas);
  const std::size_t k = omegas.size();
  if (V.ambient_dim() != N || splitting.d.ambient_dim() != N || splitting.v_alpha.size() != k)
    throw InputError("polarisation or splitting has the wrong shape");
  for (const auto& s : splitting.v_alpha)
    if (s.ambient_dim() != N) throw InputError("V_alpha lives in a space of the wrong dimension");
  if (g.rows() != N || g.cols() != N) throw InputError("metric has the wrong size");
  require(is_symmetric_positive_definite(g), "metric SPD", "metric is not symmetric positive definite");

  for (std::size_t a = 0; a < k; ++a)
    require(vanishes_on(omegas[a], V), "omega^alpha|VxV = 0",
            "omega^" + std::to_string(a + 1) + " does not vanish on V");
  const Subspace D = common_kernel(omegas, N);
  const std::size_t d = D.dim();
  require(splitting.d == D, "D = intersection of ker omega^alpha", "splitting D differs from the common kernel");
  std::vector<std::size_t> r_alpha;
  std::size_t r = 0;
  for (const auto& w : omegas) {
    r_alpha.push_back(rank(w.matrix()) / 2);
    r += r_alpha.back();
  }
  if (k > 1) {
    for (std::size_t a = 0; a < k; ++a) {
      Subspace u = V;
      for (std::size_t b = 0; b < k; ++b)
        if (b != a) u = intersect(u, one_kernel(omegas[b]));
      require(u.dim() >= d + r_alpha[a], "kernel separation",
              "V cap (ker omega^beta, beta != " + std::to_string(a + 1) + ") leaves no room for V_" +
                  std::to_string(a + 1) + ": the kernels of the omega^alpha coincide");
      require(subspace_sum(D, splitting.v_alpha[a]).sum == u, "D + V_alpha = V cap ker(omega^beta, beta != alpha)",
              "splitting condition fails for alpha = " + std::to_string(a + 1));
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    require(splitting.v_alpha[a].dim() == r_alpha[a], "dim V_alpha = r_alpha",
            "V_" + std::to_string(a + 1) + " has dimension " + std::to_string(splitting.v_alpha[a].dim()) +
                " but omega^" + std::to_string(a + 1) + " has rank " + std::to_string(2 * r_alpha[a]));
  require(V.dim() == r + d, "rank V = r + d", "V has rank " + std::to_string(V.dim()) + ", expected " +
                                                  std::to_string(r + d));
  require(N >= r + d, "dim = n + r + d", "dimension too small for r + d");
  const std::size_t n = N - r - d;
  for (std::size_t a = 0; a < k; ++a)
    require(r_alpha[a] <= n, "r_alpha <= n", "r_" + std::to_string(a + 1) + " exceeds n = " + std::to_string(n));

  std::vector<Vec> all = D.basis();
  for (const auto& s : splitting.v_alpha) {
    require(V.contains(s), "V_alpha inside V", "V_alpha is not contained in V");
    all.insert(all.end(), s.basis().begin(), s.basis().end());
  }
  require(all.size() == V.dim() && Subspace::span(N, all) == V, "V = (+) V_alpha (+) D",
          "V_alpha and D do not decompose V as a direct sum");
  if (k == 1)
    require(subspace_sum(D, splitting.v_alpha[0]).sum == V, "D + V_alpha = V", "V_1 and D do not span V");

  std::vector<Subspace> images;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Vec> im;
    for (const auto& b : splitting.v_alpha[a].basis()) im.push_back(interior(b, omegas[a]).as_vector());
    images.push_back(Subspace::span(N, im));
    require(images.back().dim() == r_alpha[a], "V_alpha cap ker omega^alpha = {0}",
            "omega^" + std::to_string(a + 1) + " is not injective on V_" + std::to_string(a + 1));
  }
  const Subspace ann = annihilator(V);
  const auto covectors = adapted_basis(ann, images, inverse(g));
  const auto complement = orthogonal_complement(V, g).basis();

  std::vector<std::vector<std::size_t>> index_sets;
  const auto cols = assemble_k_frame(omegas, splitting.v_alpha, D, complement, covectors, index_sets);
  auto rep = finish(cols, CanonicalTemplate::k_presymplectic(n, index_sets, d), {}, omegas);
  rep.splitting = splitting;
  return rep;
}

namespace {

struct Reduced {
  Subspace K;  // intersection of ker eta^alpha
  Mat K_cols;
  std::vector<AltForm> omegas;
  Subspace V;
};

Reduced restrict_to_eta_kernel(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                               const Subspace& V) {
  const std::size_t N = etas.front().dim();
  Reduced out;
  out.K = kernel_of_covectors(etas, N);
  out.K_cols = out.K.as_columns();
  for (const auto& w : omegas) out.omegas.push_back(pullback(out.K_cols, w));
  out.V = localize(out.K, V);
  return out;
}

void check_eta_clauses(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas, const Subspace& V) {
  std::vector<Vec> rows;
  for (const auto& e : etas) rows.push_back(e.as_vector());
  require(rank(Mat::from_rows(rows, etas.front().dim())) == etas.size(), "eta^1 ^ ... ^ eta^k != 0",
          "the eta^alpha are linearly dependent");
  for (std::size_t a = 0; a < etas.size(); ++a)
    require(vanishes_on(etas[a], V), "eta^alpha|V = 0", "eta^" + std::to_string(a + 1) + " does not vanish on V");
  for (std::size_t a = 0; a < omegas.size(); ++a)
    require(vanishes_on(omegas[a], V), "omega^alpha|VxV = 0",
            "omega^" + std::to_string(a + 1) + " does not vanish on V");
}

}  // namespace

DarbouxReport k_cosymplectic_darboux(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                     const Subspace& V) {
  require(!omegas.empty(), "k >= 1", "k = 0 is not a k-cosymplectic family");
  if (etas.size() != omegas.size()) throw InputError("need as many eta^alpha as omega^alpha");
  const std::size_t N = common_dim(etas, omegas);
  const std::size_t k = omegas.size();
  if (V.ambient_dim() != N) throw InputError("polarisation lives in a space of the wrong dimension");
  require(N >= k && (N - k) % (k + 1) == 0, "dim = n(k+1) + k", "dimension does not have the form n(k+1) + k");
  const std::size_t n = (N - k) / (k + 1);
  check_eta_clauses(etas, omegas, V);
  const Subspace ker_all = common_kernel(omegas, N);
  require(intersect(ker_all, kernel_of_covectors(etas, N)).is_zero(),
          "intersection of (ker eta^alpha cap ker omega^alpha) = {0}", "a nonzero vector is killed by every form");
  require(ker_all.dim() == k, "rank of intersection of ker omega^alpha = k",
          "common kernel of the omega^alpha has rank " + std::to_string(ker_all.dim()));
  require(V.dim() == n * k, "rank V = nk", "V has rank " + std::to_string(V.dim()));

  const auto reeb = reeb_solve(etas, omegas);
  if (!reeb.freedom.is_zero()) throw std::logic_error("k-cosymplectic Reeb vectors not unique");
  const auto red = restrict_to_eta_kernel(etas, omegas, V);
  const auto inner = k_symplectic_darboux(red.omegas, red.V);

  std::vector<Vec> cols = reeb.base;
  for (const auto& c : inner.frame.change().columns()) cols.push_back(red.K_cols * c);
  auto rep = finish(cols, CanonicalTemplate::k_cosymplectic(k, n), etas, omegas);
  rep.reeb = reeb.base;
  rep.reeb_freedom = reeb.freedom;
  Splitting s{{}, Subspace(N)};
  for (const auto& va : inner.splitting->v_alpha) s.v_alpha.push_back(embed(red.K_cols, va));
  rep.splitting = s;
  return rep;
}

DarbouxReport k_precosymplectic_darboux(const std::vector<AltForm>& etas, const std::vector<AltForm>& omegas,
                                        const Subspace& V, const Splitting& splitting, const Mat& g) {
  require(!omegas.empty(), "k >= 1", "k = 0 is not a k-precosymplectic family");
  if (etas.size() != omegas.size()) throw InputError("need as many eta^alpha as omega^alpha");
  const std::size_t N = common_dim(etas, omegas);
  const std::size_t k = omegas.size();
  if (V.ambient_dim() != N || splitting.d.ambient_dim() != N || splitting.v_alpha.size() != k)
    throw InputError("polarisation or splitting has the wrong shape");
  if (g.rows() != N || g.cols() != N) throw InputError("metric has the wrong size");
  require(is_symmetric_positive_definite(g), "metric SPD", "metric is not symmetric positive definite");
  check_eta_clauses(etas, omegas, V);
  const Subspace ker_all = common_kernel(omegas, N);
  const Subspace D = intersect(ker_all, kernel_of_covectors(etas, N));
  const std::size_t d = D.dim();
  require(ker_all.dim() == k + d, "rank of intersection of ker omega^alpha = k + d",
          "common kernel of the omega^alpha has rank " + std::to_string(ker_all.dim()) + ", expected " +
              std::to_string(k + d));
  require(splitting.d == D, "D = intersection of (ker omega^alpha cap ker eta^alpha)",
          "splitting D differs from the common kernel of all forms");
  for (const auto& s : splitting.v_alpha)
    require(V.contains(s), "V_alpha inside V", "V_alpha is not contained in V");

  const auto reeb = reeb_solve(etas, omegas);
  const auto red = restrict_to_eta_kernel(etas, omegas, V);
  Splitting local{{}, localize(red.K, D)};
  for (const auto& s : splitting.v_alpha) local.v_alpha.push_back(localize(red.K, s));
  const Mat g_local = red.K_cols.transpose() * g * red.K_cols;
  const auto inner = k_presymplectic_darboux(red.omegas, red.V, local, g_local);

  std::vector<Vec> cols = reeb.base;
  for (const auto& c : inner.frame.change().columns()) cols.push_back(red.K_cols * c);
  auto rep = finish(cols, CanonicalTemplate::k_precosymplectic(inner.tmpl.n, inner.tmpl.index_sets, d), etas,
                    omegas);
  rep.reeb = reeb.base;
  rep.reeb_freedom = reeb.freedom;
  rep.splitting = splitting;
  return rep;
}

}  // namespace darboux
