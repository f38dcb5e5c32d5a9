// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_SCALARS_HPP
#define GOSSET_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

namespace gosset {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultTol = 1e-9;

/// Exact element a + b*sqrt(5) of the golden field Q(sqrt 5).
///
/// Coefficients are arbitrary-precision rationals, so every ring operation is
/// exact. Values are immutable once built; arithmetic returns new values.
class GoldenScalar {
 public:
  GoldenScalar() = default;
  GoldenScalar(long long a) : a_(a) {}  // NOLINT: integers embed implicitly
  GoldenScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenScalar tau();    // (1 + sqrt5) / 2
  static GoldenScalar sigma();  // (1 - sqrt5) / 2
  static GoldenScalar sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// a^2 - 5 b^2; zero only for the zero element.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }
  /// Galois conjugate a - b sqrt5 (swaps tau and sigma).
  GoldenScalar conjugate() const { return {a_, -b_}; }

  /// Division that reports a zero divisor instead of throwing.
  std::optional<GoldenScalar> checked_div(const GoldenScalar& rhs) const;

  double to_double() const;
  std::string to_string() const;

  GoldenScalar operator-() const { return {-a_, -b_}; }
  GoldenScalar& operator+=(const GoldenScalar& rhs);
  GoldenScalar& operator-=(const GoldenScalar& rhs);
  GoldenScalar& operator*=(const GoldenScalar& rhs);
  // Throws Error(DivisionByZero) on a zero divisor.
  GoldenScalar& operator/=(const GoldenScalar& rhs);

  friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
  friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
  friend GoldenScalar operator*(GoldenScalar x, const GoldenScalar& y) { return x *= y; }
  friend GoldenScalar operator/(GoldenScalar x, const GoldenScalar& y) { return x /= y; }
  friend bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x);

/// Float with an attached absolute tolerance; equality is |x - y| <= tol.
struct Approx {
  double value = 0.0;
  double tol = kDefaultTol;

  friend bool operator==(const Approx& x, const Approx& y) {
    return std::abs(x.value - y.value) <= std::max(x.tol, y.tol);
  }
  friend bool operator==(const Approx& x, double y) { return std::abs(x.value - y) <= x.tol; }
};

inline bool near(double x, double y, double tol = kDefaultTol) { return std::abs(x - y) <= tol; }

inline bool near_rel(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

}  // namespace gosset

#endif  // GOSSET_SCALARS_HPP
