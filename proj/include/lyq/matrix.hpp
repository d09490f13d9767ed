#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lyq/rational.hpp"

namespace lyq {

using Vec = std::vector<Rational>;

// Vector helpers.
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c*x
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix outer(const Vec& col, const Vec& row);  // col * row^T

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  Matrix operator-() const;
  Vec apply(const Vec& v) const;           // this * v
  Vec apply_transpose(const Vec& v) const;  // this^T * v
  Matrix transpose() const;
  Rational trace() const;
  Matrix kron(const Matrix& o) const;  // Kronecker product

  /// Flattens to a single row-major vector of length rows*cols.
  Vec vectorize() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// In-place reduction to reduced row echelon form. Returns the pivot
/// columns in order. Zero rows are moved to the bottom and trimmed off if
/// trim is set.
std::vector<std::size_t> rref(Matrix& m, bool trim = true);

std::size_t rank(Matrix m);

/// Canonical basis (reduced echelon rows) of the null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Some solution of m x = b, or nullopt if inconsistent.
/// Throws std::invalid_argument on shape mismatch.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square full-rank matrix. Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

Rational determinant(Matrix m);

}  // namespace lyq
