#pragma once

#include <cstddef>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> columns() const;
  Mat transpose() const;

  bool operator==(const Mat& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);

// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

// Forward elimination is fraction-free (Bareiss) on a row-scaled integer copy;
// the pivot row in each column is the first one with a nonzero entry.
Echelon rref(const Mat& m);

// A linear subspace of Q^ambient_dim. The basis is always the nonzero rows of a
// reduced row echelon form, so two subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // Matrix whose columns are the basis vectors.
  Mat as_columns() const;

  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

std::size_t rank(const Mat& m);
Subspace kernel_basis(const Mat& m);
Subspace intersect(const Subspace& a, const Subspace& b);

struct SumResult {
  Subspace sum;
  bool is_direct = false;
};
SumResult subspace_sum(const Subspace& a, const Subspace& b);

// Covectors (as coordinate vectors in the dual basis) vanishing on s.
Subspace annihilator(const Subspace& s);

// True when g is symmetric with all leading principal minors positive.
bool is_symmetric_positive_definite(const Mat& g);
// {v : g(v, s) = 0}. Throws StructureError when g is not SPD.
Subspace orthogonal_complement(const Subspace& s, const Mat& g);
// Complement of `inner` inside `outer` relative to the SPD form g.
Subspace relative_complement(const Subspace& outer, const Subspace& inner, const Mat& g);

Rat determinant(const Mat& m);
// Throws StructureError for a singular matrix.
Mat inverse(const Mat& m);

// One solution of m x = b with free variables set to zero, or nothing.
bool solve_particular(const Mat& m, const Vec& b, Vec& out);

// Coordinates of v in the given (independent) vectors; throws if v is outside their span.
Vec coordinates_in(const std::vector<Vec>& vectors, const Vec& v);

// Standard basis vectors completing s to the whole space: e_j for each
// non-pivot column j of s's echelon basis.
std::vector<Vec> coordinate_complement(const Subspace& s);

}  // namespace darboux
