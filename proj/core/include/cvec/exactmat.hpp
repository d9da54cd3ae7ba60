#pragma once

// Exact integer and rational matrices. Integers are GMP mpz values and
// rationals are mpq values, which GMP keeps canonical (lowest terms,
// positive denominator) after every arithmetic operation.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cvec/errors.hpp"

namespace cvec {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix diagonal(std::span<const T> diag);
  static Matrix column(std::span<const T> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }
  std::vector<T> row(std::size_t i) const;
  std::vector<T> col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const T> v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.multiply(b); }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Strict weak order: shape first, then entries in row-major lexicographic order.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  // Vertical and horizontal concatenation.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

 private:
  Matrix multiply(const Matrix& o) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

extern template class Matrix<Integer>;
extern template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Returns nullopt when some entry has a denominator other than 1.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

// Integer inverse of a matrix with determinant +-1. Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Minimal positive diagonal D with DB skew-symmetric, or nullopt.
// Minimal means the d_i have gcd 1 on every connected component of the
// graph {i - j : b_ij != 0}.
std::optional<IntMatrix> skew_symmetrizer(const IntMatrix& b);

struct Echelon {
  RatMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form. Forward elimination is fraction-free on the
// integer-scaled rows; back substitution runs over the rationals.
Echelon row_reduce(const RatMatrix& m);

std::size_t rat_rank(const RatMatrix& m);
// Columns form a basis of the right null space {x : Mx = 0}.
RatMatrix rat_kernel(const RatMatrix& m);
// One solution of MX = B (B may have several columns), or nullopt.
std::optional<RatMatrix> rat_solve(const RatMatrix& m, const RatMatrix& b);
std::optional<RatVector> rat_solve(const RatMatrix& m, std::span<const Rational> b);
// Throws DimensionMismatch for non-square input and Error for singular input.
RatMatrix rat_inverse(const RatMatrix& m);

// Row-major sparse rational matrix; rows hold (column, value) pairs sorted
// by column with no stored zeros.
class SparseRatMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseRatMatrix() = default;
  SparseRatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
  static SparseRatMatrix from_dense(const RatMatrix& m);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_.at(i); }
  // Adds v to entry (i, j).
  void add(std::size_t i, std::size_t j, const Rational& v);
  RatMatrix to_dense() const;

  static SparseRatMatrix hstack(const SparseRatMatrix& left, const SparseRatMatrix& right);
  static SparseRatMatrix vstack(const SparseRatMatrix& top, const SparseRatMatrix& bottom);
  SparseRatMatrix operator-() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Elimination over sparse rows. Pivot columns are chosen left to right, so
// they are the greedy column basis, matching the dense routines.
std::size_t rat_rank(const SparseRatMatrix& m);
RatMatrix rat_kernel(const SparseRatMatrix& m);
std::vector<std::size_t> extending_columns(const SparseRatMatrix& start, const RatMatrix& m);

// Indices of columns of m that extend the span of `start` greedily; the
// returned columns together with `start` form a basis of span(start, m).
std::vector<std::size_t> extending_columns(const RatMatrix& start, const RatMatrix& m);

// Rows space-separated, one row per line.
std::string to_text(const IntMatrix& m);
// Compact nested-list rendering, e.g. [[0,1],[-1,0]].
std::string to_compact(const IntMatrix& m);

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
IntVector negate(std::span<const Integer> v);

}  // namespace cvec
