#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadlin/cyclo.hpp"

namespace quadlin {

using Vector = std::vector<Cyclo>;

/// Dense row-major matrix over the cyclotomic numbers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Cyclo& c);
  static Matrix from_rows(const std::vector<std::vector<Cyclo>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Cyclo& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclo& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  Matrix transpose() const;
  Matrix conjugate() const;
  Cyclo trace() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  /// c if this matrix equals c * I.
  std::optional<Cyclo> scalar_value() const;

  /// Canonical text, used as a hash key for group elements.
  std::string key() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(const Cyclo& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclo> data_;
};

Cyclo determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the kernel, one vector per free column of the reduced echelon form.
std::vector<Vector> nullspace(const Matrix& m);
/// The pivot columns of m: a basis of its column space.
std::vector<Vector> column_basis(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Indices of a maximal independent subset of the vectors, greedily from the front.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// x^T q y
Cyclo bilinear(const Vector& x, const Matrix& q, const Vector& y);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Cyclo& c, const Vector& v);
bool is_zero(const Vector& v);

/// Pfaffian of an antisymmetric matrix of even size (expansion along row 0).
Cyclo pfaffian(const Matrix& m);

}  // namespace quadlin
