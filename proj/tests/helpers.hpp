#pragma once

#include <random>

#include "darboux/connection.hpp"
#include "darboux/exterior.hpp"
#include "darboux/polyforms.hpp"
#include "darboux/sampling.hpp"

namespace testing_support {

using namespace darboux;

inline AltForm random_altform(std::mt19937_64& rng, std::size_t dim, std::size_t degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  AltForm a(dim, degree);
  for (const auto& idx : increasing_tuples(dim, degree))
    if (keep(rng)) a.add(idx, random_rat(rng, 4, 3));
  return a;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_rat(rng, 4, 3);
  return v;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t terms = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Poly p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    const unsigned total = deg(rng);
    for (unsigned j = 0; j < total; ++j) ++e[var(rng)];
    p.add_term(e, random_rat(rng, 3, 2));
  }
  return p;
}

inline Chart chart_of(std::size_t n) {
  Chart c;
  for (std::size_t i = 0; i < n; ++i) c.push_back("x" + std::to_string(i + 1));
  return c;
}

inline PolyForm random_polyform(std::mt19937_64& rng, const Chart& chart, std::size_t degree, unsigned max_poly_degree) {
  std::bernoulli_distribution keep(0.5);
  PolyForm a(chart, degree);
  for (const auto& idx : increasing_tuples(chart.size(), degree))
    if (keep(rng)) a.add(idx, random_poly(rng, chart.size(), max_poly_degree));
  return a;
}

inline PolyVectorField random_field(std::mt19937_64& rng, const Chart& chart, unsigned max_degree) {
  PolyVectorField X{chart, {}};
  for (std::size_t i = 0; i < chart.size(); ++i) X.components.push_back(random_poly(rng, chart.size(), max_degree, 2));
  return X;
}

// Skew coefficient matrix assembled straight from the stored terms.
inline std::vector<std::vector<Rat>> skew_matrix(const AltForm& a) {
  std::vector<std::vector<Rat>> m(a.dim(), std::vector<Rat>(a.dim(), Rat(0)));
  for (const auto& [idx, c] : a.terms()) {
    m[idx[0]][idx[1]] += c;
    m[idx[1]][idx[0]] -= c;
  }
  return m;
}

// F^T A F by schoolbook multiplication.
inline std::vector<std::vector<Rat>> congruence(const Mat& F, const std::vector<std::vector<Rat>>& A) {
  const std::size_t n = F.rows(), m = F.cols();
  std::vector<std::vector<Rat>> out(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rat s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (A[a][b] != 0) s += F(a, i) * A[a][b] * F(b, j);
      out[i][j] = s;
    }
  return out;
}

// eta row vector times F.
inline std::vector<Rat> covector_times(const AltForm& eta, const Mat& F) {
  std::vector<Rat> row(F.cols(), Rat(0));
  for (const auto& [idx, c] : eta.terms())
    for (std::size_t j = 0; j < F.cols(); ++j) row[j] += c * F(idx[0], j);
  return row;
}

inline std::vector<Rat> covector_entries(const AltForm& eta) {
  std::vector<Rat> row(eta.dim(), Rat(0));
  for (const auto& [idx, c] : eta.terms()) row[idx[0]] = c;
  return row;
}

// Independent check that the frame carries the input forms to the template.
inline bool congruence_oracle(const Mat& F, const std::vector<AltForm>& in_omegas, const std::vector<AltForm>& in_etas,
                              const CanonicalTemplate& t) {
  const auto tw = t.omegas();
  const auto te = t.etas();
  if (tw.size() != in_omegas.size() || te.size() != in_etas.size()) return false;
  for (std::size_t a = 0; a < tw.size(); ++a)
    if (congruence(F, skew_matrix(in_omegas[a])) != skew_matrix(tw[a])) return false;
  for (std::size_t a = 0; a < te.size(); ++a)
    if (covector_times(in_etas[a], F) != covector_entries(te[a])) return false;
  return true;
}

using PolyMatrixN = std::vector<std::vector<Poly>>;

inline PolyMatrixN multiply(const PolyMatrixN& a, const PolyMatrixN& b, std::size_t n) {
  PolyMatrixN out(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Christoffels of the flat connection transported by phi^i = x^i + f_i(x^1..x^{i-1}).
inline Connection transported_flat(const PolyMap& phi) {
  const std::size_t n = phi.source.size();
  PolyMatrixN N(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) N[i][j] = phi.components[i].derivative(j);
  // J^{-1} = sum_m (-N)^m, N nilpotent
  PolyMatrixN inv(n, std::vector<Poly>(n, Poly(n))), term(n, std::vector<Poly>(n, Poly(n)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = term[i][i] = Poly::constant(n, Rat(1));
  PolyMatrixN minus_n = N;
  for (auto& row : minus_n)
    for (auto& p : row) p = -p;
  for (std::size_t m = 1; m < n; ++m) {
    term = multiply(term, minus_n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv[i][j] += term[i][j];
  }
  Connection c(phi.source);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Poly second = phi.components[k].derivative(a).derivative(b);
        if (second.is_zero()) continue;
        for (std::size_t cc = 0; cc < n; ++cc) c.gamma(cc, a, b) += inv[cc][k] * second;
      }
  return c;
}


// phi^i = x^i + f_i(x^1..x^{i-1}): a polynomial diffeomorphism with polynomial inverse
inline PolyMap random_triangular_map(std::mt19937_64& rng, const Chart& ch) {
  const std::size_t n = ch.size();
  PolyMap phi{ch, ch, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Poly f = Poly::variable(n, i);
    if (i > 0) {
      const Poly g = random_poly(rng, i, 2, 2);
      std::vector<Poly> embed;
      for (std::size_t j = 0; j < i; ++j) embed.push_back(Poly::variable(n, j));
      f += g.substitute(embed);
    }
    phi.components.push_back(f);
  }
  return phi;
}

}  // namespace testing_support
