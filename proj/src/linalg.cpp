// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gosset/error.hpp"

namespace gosset {

double Vector::dot(const Vector& rhs) const {
  if (rhs.dim() != dim()) throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
  return std::inner_product(c_.begin(), c_.end(), rhs.c_.begin(), 0.0);
}

double Vector::norm() const { return std::sqrt(norm2()); }

double Vector::max_abs() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

Vector& Vector::operator+=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (double& x : out.c_) x = -x;
  return out;
}

double distance_max(const Vector& x, const Vector& y) { return (x - y).max_abs(); }

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(std::vector<double>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs_diff(const Matrix& rhs) const {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - rhs.a_[k]));
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.dim()) throw Error(ErrorCode::InvalidArgument, "matrix/vector shape mismatch");
  Vector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols_; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix out = x;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += y.a_[k];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-1.0) * y; }

Matrix operator*(double s, Matrix m) {
  for (double& a : m.a_) a *= s;
  return m;
}

Matrix cholesky_lower(const Matrix& g, double tol) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw Error(ErrorCode::InvalidArgument, "Cholesky needs a square matrix");
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= tol) throw Error(ErrorCode::NotFiniteType, "Gram matrix is not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

namespace {

// LU with partial pivoting in place; returns the determinant sign-adjusted
// product of pivots, or throws when a pivot is below tol.
double lu_in_place(Matrix& a, std::vector<std::size_t>& perm, double tol) {
  const std::size_t n = a.rows();
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) < tol) throw Error(ErrorCode::Singular, "matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      std::swap(perm[p], perm[k]);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return det;
}

Vector lu_solve(const Matrix& lu, const std::vector<std::size_t>& perm, const Vector& b) {
  const std::size_t n = lu.rows();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
    x[i] = s / lu(i, i);
  }
  return x;
}

}  // namespace

std::vector<double> leading_minors(const Matrix& g) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Matrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
    std::vector<std::size_t> perm;
    try {
      out.push_back(lu_in_place(sub, perm, 0.0));
    } catch (const Error&) {
      out.push_back(0.0);
    }
  }
  return out;
}

Vector solve(const Matrix& a, const Vector& b, double tol) {
  if (a.rows() != a.cols() || b.dim() != a.rows())
    throw Error(ErrorCode::InvalidArgument, "solve: shape mismatch");
  Matrix lu = a;
  std::vector<std::size_t> perm;
  lu_in_place(lu, perm, tol);
  return lu_solve(lu, perm, b);
}

Matrix inverse(const Matrix& a, double tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::InvalidArgument, "inverse needs a square matrix");
  Matrix lu = a;
  std::vector<std::size_t> perm;
  lu_in_place(lu, perm, tol);
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1.0;
    Vector col = lu_solve(lu, perm, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, double off_tol, int max_sweeps) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw Error(ErrorCode::InvalidArgument, "eigen: matrix not square");
  Matrix a = input;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * (1.0 + std::abs(a(i, j))))
        throw Error(ErrorCode::InvalidArgument, "eigen: matrix not symmetric");
      a(j, i) = a(i, j);
    }
  Matrix v = Matrix::identity(n);

  // Below this level the rotations only shuffle rounding noise.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += a(i, j) * a(i, j);
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::sqrt(scale) * n;
  const double stop = std::max(off_tol, floor);

  int sweep = 0;
  while (off_diagonal_norm(a) >= stop) {
    if (sweep == max_sweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  SymmetricEigen out;
  out.sweeps = sweep;
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace gosset
