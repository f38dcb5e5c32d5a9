// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_LINALG_HPP
#define GOSSET_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gosset {

/// Dense vector in the ambient Euclidean space of a root system.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0) : c_(dim, fill) {}
  Vector(std::initializer_list<double> xs) : c_(xs) {}
  explicit Vector(std::vector<double> xs) : c_(std::move(xs)) {}

  std::size_t dim() const { return c_.size(); }
  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> coords() const { return c_; }

  double dot(const Vector& rhs) const;
  double norm2() const { return dot(*this); }
  double norm() const;
  double max_abs() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(double s);
  Vector operator-() const;

  friend Vector operator+(Vector x, const Vector& y) { return x += y; }
  friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
  friend Vector operator*(Vector x, double s) { return x *= s; }
  friend Vector operator*(double s, Vector x) { return x *= s; }
  friend Vector operator/(Vector x, double s) { return x *= 1.0 / s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> c_;
};

/// Max-norm distance.
double distance_max(const Vector& x, const Vector& y);

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors.
  static Matrix from_rows(std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Matrix transpose() const;
  double trace() const;
  double max_abs_diff(const Matrix& rhs) const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(double s, Matrix m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

/// Lower-triangular L with L * L^T = g. Throws NotFiniteType when g is not
/// positive definite (a pivot falls below `tol`).
Matrix cholesky_lower(const Matrix& g, double tol = 1e-9);

/// Leading principal minors det(g[0..k, 0..k]) for k = 1..n.
std::vector<double> leading_minors(const Matrix& g);

/// Solves a x = b by Gaussian elimination with partial pivoting. Throws
/// Singular when a pivot falls below `tol`.
Vector solve(const Matrix& a, const Vector& b, double tol = 1e-12);
Matrix inverse(const Matrix& a, double tol = 1e-12);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k is the eigenvector of values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations for a small dense symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops below `off_tol`; sweep order is fixed.
SymmetricEigen jacobi_eigen(const Matrix& a, double off_tol = 1e-13, int max_sweeps = 100);

}  // namespace gosset

#endif  // GOSSET_LINALG_HPP
