#include "darboux/linalg.hpp"

#include <algorithm>
#include <utility>

namespace darboux {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("matrix column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Mat::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  Mat m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector product: shape mismatch");
  Vec out(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

// Bareiss forward elimination on an integer matrix; returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<mpz_class>> integer_rows(const Mat& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

}  // namespace

Echelon rref(const Mat& m) {
  auto ints = integer_rows(m);
  auto pivots = bareiss(ints, m.cols());
  Mat red(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& lead = ints[r][pivots[r]];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      red(r, c) = Rat(ints[r][c], lead);
      red(r, c).canonicalize();
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rat f = red(above, pivots[r]);
      if (f == 0) continue;
      for (std::size_t c = pivots[r]; c < m.cols(); ++c) red(above, c) -= f * red(r, c);
    }
  }
  return {std::move(red), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  auto ints = integer_rows(m);
  return bareiss(ints, m.cols()).size();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  auto e = rref(Mat::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vec(ambient, i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw InputError("subspace membership: dimension mismatch");
  // Reduce v against the echelon basis; membership iff the residue vanishes.
  Vec w = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (w[p] != 0) {
      Rat f = w[p];
      for (std::size_t c = p; c < ambient_; ++c) w[c] -= f * b[c];
    }
  }
  return darboux::is_zero(w);
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_dim() != ambient_) throw InputError("subspace inclusion: dimension mismatch");
  for (const auto& v : s.basis())
    if (!contains(v)) return false;
  return true;
}

Mat Subspace::as_columns() const { return Mat::from_columns(basis_, ambient_); }

Subspace kernel_basis(const Mat& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vecs);
}

Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel_basis(Mat::from_rows(s.basis(), s.ambient_dim()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: dimension mismatch");
  const std::size_t n = a.ambient_dim();
  std::vector<Vec> rows = annihilator(a).basis();
  const Subspace ann_b = annihilator(b);
  rows.insert(rows.end(), ann_b.basis().begin(), ann_b.basis().end());
  if (rows.empty()) return Subspace::full(n);
  return kernel_basis(Mat::from_rows(rows, n));
}

SumResult subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace sum: dimension mismatch");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  SumResult out{Subspace::span(a.ambient_dim(), all), false};
  out.is_direct = out.sum.dim() == a.dim() + b.dim();
  return out;
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  Mat a = m;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_symmetric_positive_definite(const Mat& g) {
  if (g.rows() != g.cols()) return false;
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

Subspace orthogonal_complement(const Subspace& s, const Mat& g) {
  if (g.rows() != s.ambient_dim()) throw InputError("orthogonal complement: metric size mismatch");
  if (!is_symmetric_positive_definite(g))
    throw StructureError("metric SPD", "metric is not symmetric positive definite");
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  Mat sg = Mat::from_rows(s.basis(), s.ambient_dim()) * g;
  return kernel_basis(sg);
}

Subspace relative_complement(const Subspace& outer, const Subspace& inner, const Mat& g) {
  return intersect(outer, orthogonal_complement(inner, g));
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw StructureError("invertible", "matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool solve_particular(const Mat& m, const Vec& b, Vec& out) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return false;
  out = zero_vec(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out[e.pivots[r]] = e.reduced(r, m.cols());
  return true;
}

Vec coordinates_in(const std::vector<Vec>& vectors, const Vec& v) {
  Mat a = Mat::from_columns(vectors, v.size());
  Vec x;
  if (!solve_particular(a, v, x)) throw StructureError("span membership", "vector lies outside the span");
  return x;
}

std::vector<Vec> coordinate_complement(const Subspace& s) {
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (const auto& b : s.basis()) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    pivot[p] = true;
  }
  std::vector<Vec> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!pivot[j]) out.push_back(unit_vec(s.ambient_dim(), j));
  return out;
}

}  // namespace darboux
