#include "quadlin/matrix.hpp"

#include "quadlin/error.hpp"

namespace quadlin {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Cyclo inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Cyclo f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) { return scalar(n, Cyclo(1L)); }

Matrix Matrix::scalar(std::size_t n, const Cyclo& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclo>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(Error::Kind::Schema, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = x.conjugate();
  return c;
}

Cyclo Matrix::trace() const {
  Cyclo t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  auto s = scalar_value();
  return s && s->is_one();
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_antisymmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::optional<Cyclo> Matrix::scalar_value() const {
  if (!square() || rows_ == 0) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return std::nullopt;
      if (i == j && (*this)(i, j) != (*this)(0, 0)) return std::nullopt;
    }
  return (*this)(0, 0);
}

std::string Matrix::key() const {
  std::string k;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) k += i % cols_ == 0 ? ';' : ',';
    k += data_[i].key();
  }
  return k;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Error::Kind::Internal, "matrix size mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Error::Kind::Internal, "matrix size mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Error::Kind::Internal, "matrix size mismatch in product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclo& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclo& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(Error::Kind::Internal, "size mismatch in matrix-vector product");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

Matrix operator*(const Cyclo& c, Matrix m) {
  for (auto& x : m.data_) x = c * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Cyclo determinant(const Matrix& m) {
  if (!m.square()) throw Error(Error::Kind::Internal, "determinant of non-square matrix");
  Matrix a = m;
  Cyclo det(1L);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Cyclo();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Cyclo inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Cyclo f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyclo(1L);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Cyclo(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_basis(const Matrix& m) {
  Matrix a = m;
  std::vector<Vector> basis;
  for (auto p : rref(a)) basis.push_back(m.column(p));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  Matrix a = Matrix::from_columns(vectors, vectors.front().size());
  return rref(a);
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v);
  return solve(Matrix::from_columns(basis, v.size()), v).has_value();
}

Cyclo bilinear(const Vector& x, const Matrix& q, const Vector& y) {
  Cyclo sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Cyclo row;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!q(i, j).is_zero() && !y[j].is_zero()) row += q(i, j) * y[j];
    if (!row.is_zero()) sum += x[i] * row;
  }
  return sum;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const Cyclo& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = c * v[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Cyclo pfaffian(const Matrix& m) {
  const std::size_t n = m.rows();
  if (!m.square() || n % 2 != 0) throw Error(Error::Kind::Internal, "pfaffian needs even square size");
  if (n == 0) return Cyclo(1L);
  Cyclo total;
  for (std::size_t j = 1; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    Matrix minor(n - 2, n - 2);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b) minor(a, b) = m(keep[a], keep[b]);
    Cyclo term = m(0, j) * pfaffian(minor);
    if (j % 2 == 1) total += term; else total -= term;
  }
  return total;
}

}  // namespace quadlin
