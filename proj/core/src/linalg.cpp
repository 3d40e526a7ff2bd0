#include "ptlattice/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ptlattice/error.hpp"

namespace ptl {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                             std::to_string(entries.size()));
  }
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = f.from_int(entries[i]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error(Errc::DimensionMismatch, "hstack row counts differ");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "vstack column counts differ");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length differs from column count");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).to_string();
    }
  }
  os << ']';
  return os.str();
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw Error(Errc::DimensionMismatch, "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                             " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) m(r, c) += a * o(k, c);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "sum of differently shaped matrices");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "difference of differently shaped matrices");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon out{m, 0, {}};
  Matrix& a = out.rref;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(piv, k), a(r, k));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Subspace::Subspace(Field f, std::size_t ambient_dim) : field_(f), n_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::full(Field f, std::size_t n) { return row_space(Matrix::identity(f, n)); }

Subspace Subspace::span(Field f, std::size_t n, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(f, n, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  Subspace s(m.field(), m.cols());
  Matrix b(m.field(), e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) b(r, c) = e.rref(r, c);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != n_) throw Error(Errc::DimensionMismatch, "vector outside the ambient space");
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < n_; ++c)
      if (!basis_(i, c).is_zero()) w[c] -= f * basis_(i, c);
  }
  return w;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  check_compatible(o);
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(Errc::DimensionMismatch, "vector does not lie in the subspace");
  Vector out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace Subspace::sum(const Subspace& o) const {
  check_compatible(o);
  return row_space(Matrix::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_compatible(o);
  if (dim() == 0 || o.dim() == 0) return Subspace(field_, n_);
  // x*U = y*W  <=>  (x, y) in the left kernel of [U; -W].
  const Matrix stacked = Matrix::vstack(basis_, o.basis_.scaled(-field_.one()));
  const Subspace rel = kernel_basis(stacked.transpose());
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < rel.dim(); ++i) {
    const Vector coeff = rel.basis_vector(i);
    Vector x(n_, field_.zero());
    for (std::size_t k = 0; k < dim(); ++k) {
      if (coeff[k].is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c) x[c] += coeff[k] * basis_(k, c);
    }
    vecs.push_back(std::move(x));
  }
  return span(field_, n_, vecs);
}

void Subspace::check_compatible(const Subspace& o) const {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "ambient dimensions differ");
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "subspaces over different fields");
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  const Field f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n, f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = -e.rref(i, free);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(f, n, vecs);
}

Subspace image_basis(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace ptl
