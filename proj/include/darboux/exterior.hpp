#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "darboux/linalg.hpp"

namespace darboux {

// Strictly increasing, zero-based index tuple.
using Multi = std::vector<std::size_t>;

// Sorts `idx` in place. Returns the permutation sign, or 0 if an index repeats.
int sort_with_sign(Multi& idx);

// All strictly increasing k-tuples drawn from {0, ..., n-1}, lexicographic.
std::vector<Multi> increasing_tuples(std::size_t n, std::size_t k);

// Alternating k-form on Q^n stored by its coefficients on e^{i1}^...^e^{ik},
// i1 < ... < ik. Zero coefficients are never stored, so equality is literal.
class AltForm {
 public:
  AltForm() = default;
  AltForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  // e^i as a one-form.
  static AltForm basis_covector(std::size_t dim, std::size_t i);
  static AltForm covector(const Vec& coeffs);
  // 2-form with matrix entries a(e_i, e_j) = m(i, j); m must be antisymmetric.
  static AltForm from_matrix(const Mat& m);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Multi, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c times e^{idx}; idx may be unsorted (the sign is absorbed).
  void add(Multi idx, const Rat& c);
  Rat coefficient(Multi idx) const;

  // a(v1, ..., vk) for k = degree.
  Rat evaluate(const std::vector<Vec>& vectors) const;
  // Degree-2 forms only: m(i, j) = a(e_i, e_j).
  Mat matrix() const;
  // Degree-1 forms only: coefficient vector.
  Vec as_vector() const;

  AltForm operator-() const;
  bool operator==(const AltForm& o) const = default;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Multi, Rat> terms_;
};

AltForm operator+(const AltForm& a, const AltForm& b);
AltForm operator-(const AltForm& a, const AltForm& b);
AltForm operator*(const Rat& s, const AltForm& a);

AltForm wedge(const AltForm& a, const AltForm& b);
// Contraction in the first slot. Throws InputError on a degree-0 form.
AltForm interior(const Vec& v, const AltForm& a);
// (L^* a)(v1..vk) = a(L v1, ..., L vk). L has a.dim() rows; the result lives on Q^{L.cols()}.
AltForm pullback(const Mat& L, const AltForm& a);
// {v : i_v a = 0}.
Subspace one_kernel(const AltForm& a);
// {v : i(v ^ w1 ^ ... ^ wr) a = 0 for all w's in W}, 1 <= r <= degree - 1.
Subspace r_orthogonal(const Subspace& W, const AltForm& a, std::size_t r);

// Restriction to a subspace vanishes: a(w1, ..., wk) = 0 for all w's in W.
bool vanishes_on(const AltForm& a, const Subspace& W);

// Change of basis: columns are the new basis vectors in old coordinates.
class Frame {
 public:
  Frame() = default;
  // Throws StructureError when `change` is singular.
  explicit Frame(Mat change);
  std::size_t dim() const noexcept { return change_.rows(); }
  const Mat& change() const noexcept { return change_; }
  // Coefficients of a form in the new basis.
  AltForm express(const AltForm& a) const { return pullback(change_, a); }

 private:
  Mat change_;
};

}  // namespace darboux
