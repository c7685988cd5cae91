#pragma once

#include <cstddef>
#include <vector>

#include "lienil/scalar.hpp"

namespace lienil {

using Vector = std::vector<Scalar>;

/// Dense matrix over Q(i). All dimensions in this project are small
/// (at most a few hundred rows from exterior powers), so no sparsity.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  /// Matrix-vector product m*v with v as a column.
  Vector apply(const Vector& v) const;

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form via Gaussian elimination with
/// deterministic pivoting (first nonzero entry in column order).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows span the right null space {v : m v = 0}; row count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero_vector(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);

}  // namespace lienil
