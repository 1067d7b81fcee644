#include "darboux/exterior.hpp"

#include <algorithm>
#include <utility>

namespace darboux {

int sort_with_sign(Multi& idx) {
  int sign = 1;
  // Insertion sort counts transpositions; tuples are short.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

std::vector<Multi> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<Multi> out;
  if (k > n) return out;
  Multi cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

AltForm AltForm::basis_covector(std::size_t dim, std::size_t i) {
  if (i >= dim) throw InputError("covector index out of range");
  AltForm f(dim, 1);
  f.add({i}, Rat(1));
  return f;
}

AltForm AltForm::covector(const Vec& coeffs) {
  AltForm f(coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add({i}, coeffs[i]);
  return f;
}

AltForm AltForm::from_matrix(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("two-form matrix must be square");
  AltForm f(m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) throw InputError("two-form matrix must be antisymmetric");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) throw InputError("two-form matrix must be antisymmetric");
      f.add({i, j}, m(i, j));
    }
  }
  return f;
}

void AltForm::add(Multi idx, const Rat& c) {
  if (idx.size() != degree_) throw InputError("index tuple length differs from form degree");
  for (auto i : idx)
    if (i >= dim_) throw InputError("form index out of range");
  if (c == 0) return;
  const int s = sort_with_sign(idx);
  if (s == 0) return;
  auto it = terms_.find(idx);
  Rat v = (it == terms_.end() ? Rat(0) : it->second) + (s > 0 ? Rat(c) : Rat(-c));
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[idx] = v;
  }
}

Rat AltForm::coefficient(Multi idx) const {
  const int s = sort_with_sign(idx);
  if (s == 0) return Rat(0);
  auto it = terms_.find(idx);
  if (it == terms_.end()) return Rat(0);
  return s > 0 ? it->second : Rat(-it->second);
}

Rat AltForm::evaluate(const std::vector<Vec>& vectors) const {
  if (vectors.size() != degree_) throw InputError("evaluate: wrong number of vectors");
  for (const auto& v : vectors)
    if (v.size() != dim_) throw InputError("evaluate: vector has wrong length");
  Rat total = 0;
  for (const auto& [idx, c] : terms_) {
    Mat m(degree_, degree_);
    for (std::size_t r = 0; r < degree_; ++r)
      for (std::size_t col = 0; col < degree_; ++col) m(r, col) = vectors[col][idx[r]];
    total += c * determinant(m);
  }
  return total;
}

Mat AltForm::matrix() const {
  if (degree_ != 2) throw InputError("matrix view needs a two-form");
  Mat m(dim_, dim_);
  for (const auto& [idx, c] : terms_) {
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

Vec AltForm::as_vector() const {
  if (degree_ != 1) throw InputError("vector view needs a one-form");
  Vec v = zero_vec(dim_);
  for (const auto& [idx, c] : terms_) v[idx[0]] = c;
  return v;
}

AltForm AltForm::operator-() const { return Rat(-1) * *this; }

AltForm operator+(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw InputError("form sum: shape mismatch");
  AltForm r = a;
  for (const auto& [idx, c] : b.terms()) r.add(idx, c);
  return r;
}

AltForm operator-(const AltForm& a, const AltForm& b) { return a + Rat(-1) * b; }

AltForm operator*(const Rat& s, const AltForm& a) {
  AltForm r(a.dim(), a.degree());
  for (const auto& [idx, c] : a.terms()) r.add(idx, s * c);
  return r;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim()) throw InputError("wedge: dimension mismatch");
  AltForm r(a.dim(), a.degree() + b.degree());
  if (r.degree() > r.dim()) return AltForm(a.dim(), r.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      Multi idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add(std::move(idx), ca * cb);
    }
  return r;
}

AltForm interior(const Vec& v, const AltForm& a) {
  if (a.degree() == 0) throw InputError("interior product of a degree-0 form");
  if (v.size() != a.dim()) throw InputError("interior: vector has wrong length");
  AltForm r(a.dim(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (v[idx[t]] == 0) continue;
      Multi rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      Rat coeff = c * v[idx[t]];
      r.add(std::move(rest), t % 2 == 0 ? coeff : Rat(-coeff));
    }
  }
  return r;
}

AltForm pullback(const Mat& L, const AltForm& a) {
  if (L.rows() != a.dim()) throw InputError("pullback: matrix rows must equal the form dimension");
  const std::size_t m = L.cols();
  std::vector<AltForm> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(AltForm::covector(L.row(i)));
  AltForm r(m, a.degree());
  if (a.degree() > m) return r;
  for (const auto& [idx, c] : a.terms()) {
    AltForm term(m, 0);
    term.add({}, c);
    for (auto i : idx) term = wedge(term, rows[i]);
    r = r + term;
  }
  return r;
}

namespace {

// Rows: coefficients of i_v b over all (deg b - 1)-tuples; columns: coordinates of v.
void append_contraction_rows(const AltForm& b, std::vector<Vec>& rows) {
  const std::size_t n = b.dim();
  const auto tuples = increasing_tuples(n, b.degree() - 1);
  std::map<Multi, std::size_t> where;
  for (std::size_t t = 0; t < tuples.size(); ++t) where[tuples[t]] = t;
  std::vector<Vec> block(tuples.size(), zero_vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    AltForm c = interior(unit_vec(n, j), b);
    for (const auto& [idx, coeff] : c.terms()) block[where.at(idx)][j] = coeff;
  }
  for (auto& row : block)
    if (!is_zero(row)) rows.push_back(std::move(row));
}

}  // namespace

Subspace one_kernel(const AltForm& a) {
  if (a.degree() == 0) throw InputError("one-kernel of a degree-0 form");
  std::vector<Vec> rows;
  append_contraction_rows(a, rows);
  if (rows.empty()) return Subspace::full(a.dim());
  return kernel_basis(Mat::from_rows(rows, a.dim()));
}

Subspace r_orthogonal(const Subspace& W, const AltForm& a, std::size_t r) {
  if (W.ambient_dim() != a.dim()) throw InputError("r-orthogonal: dimension mismatch");
  if (r < 1 || r + 1 > a.degree()) throw InputError("r-orthogonal: r must satisfy 1 <= r <= degree - 1");
  std::vector<Vec> rows;
  for (const auto& tuple : increasing_tuples(W.dim(), r)) {
    AltForm b = a;
    for (auto t : tuple) b = interior(W.basis()[t], b);
    append_contraction_rows(b, rows);
  }
  if (rows.empty()) return Subspace::full(a.dim());
  return kernel_basis(Mat::from_rows(rows, a.dim()));
}

bool vanishes_on(const AltForm& a, const Subspace& W) {
  if (W.ambient_dim() != a.dim()) throw InputError("restriction: dimension mismatch");
  for (const auto& tuple : increasing_tuples(W.dim(), a.degree())) {
    std::vector<Vec> vs;
    for (auto t : tuple) vs.push_back(W.basis()[t]);
    if (a.evaluate(vs) != 0) return false;
  }
  return true;
}

Frame::Frame(Mat change) : change_(std::move(change)) {
  if (change_.rows() != change_.cols() || determinant(change_) == 0)
    throw StructureError("frame invertible", "frame matrix is singular");
}

}  // namespace darboux
