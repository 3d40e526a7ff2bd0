#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ptlattice/field.hpp"

namespace ptl {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over a runtime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] Matrix scaled(const Scalar& s) const;
  [[nodiscard]] std::string to_string() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

// A subspace of field^n stored by its reduced echelon basis, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient_dim);

  static Subspace zero(Field f, std::size_t n) { return Subspace(f, n); }
  static Subspace full(Field f, std::size_t n);
  static Subspace span(Field f, std::size_t n, const std::vector<Vector>& vectors);
  // Row space of m.
  static Subspace row_space(const Matrix& m);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
  [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
  [[nodiscard]] Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  [[nodiscard]] std::vector<std::size_t> non_pivots() const;

  // v minus its projection along the pivot columns; zero iff v is in the subspace.
  [[nodiscard]] Vector reduce(const Vector& v) const;
  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& o) const;
  // Coefficients of v in the echelon basis; v must lie in the subspace.
  [[nodiscard]] Vector coordinates(const Vector& v) const;

  [[nodiscard]] Subspace sum(const Subspace& o) const;
  [[nodiscard]] Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void check_compatible(const Subspace& o) const;

  Field field_;
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

}  // namespace ptl
