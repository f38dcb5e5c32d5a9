// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/scalars.hpp"

#include <sstream>

#include "gosset/error.hpp"

namespace gosset {

namespace {

const double kSqrt5 = std::sqrt(5.0);

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::UnknownDiagram: return "unknown diagram";
    case ErrorCode::MalformedSpec: return "malformed diagram spec";
    case ErrorCode::NotFiniteType: return "not of finite type";
    case ErrorCode::NotCrystallographic: return "not crystallographic";
    case ErrorCode::NotBipartite: return "diagram is not bipartite";
    case ErrorCode::Disconnected: return "diagram is disconnected";
    case ErrorCode::NoConvergence: return "iteration did not converge";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::WrongType: return "wrong root system type";
    case ErrorCode::Internal: return "internal consistency error";
  }
  return "unknown error";
}

GoldenScalar GoldenScalar::tau() { return {Rational(1, 2), Rational(1, 2)}; }
GoldenScalar GoldenScalar::sigma() { return {Rational(1, 2), Rational(-1, 2)}; }

GoldenScalar& GoldenScalar::operator+=(const GoldenScalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

GoldenScalar& GoldenScalar::operator-=(const GoldenScalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

GoldenScalar& GoldenScalar::operator*=(const GoldenScalar& rhs) {
  Rational a = a_ * rhs.a_ + 5 * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::optional<GoldenScalar> GoldenScalar::checked_div(const GoldenScalar& rhs) const {
  const Rational n = rhs.norm();
  if (n == 0) return std::nullopt;
  GoldenScalar q = *this * rhs.conjugate();
  return GoldenScalar(q.a_ / n, q.b_ / n);
}

GoldenScalar& GoldenScalar::operator/=(const GoldenScalar& rhs) {
  auto q = checked_div(rhs);
  if (!q) throw Error(ErrorCode::DivisionByZero, "golden field division by zero");
  *this = std::move(*q);
  return *this;
}

double GoldenScalar::to_double() const {
  const double a = gosset::to_double(a_);
  const double b = gosset::to_double(b_);
  // Opposite signs cancel; evaluate through the exact norm instead.
  if ((a_ > 0 && b_ < 0) || (a_ < 0 && b_ > 0)) {
    return gosset::to_double(norm()) / (a - b * kSqrt5);
  }
  return a + b * kSqrt5;
}

std::string GoldenScalar::to_string() const {
  std::ostringstream os;
  auto surd = [&os](const Rational& c) {
    if (c != 1) os << c << '*';
    os << "sqrt5";
  };
  if (b_ == 0) {
    os << a_;
  } else if (a_ == 0) {
    if (b_ == -1)
      os << "-sqrt5";
    else
      surd(b_);
  } else {
    os << a_ << (b_ < 0 ? " - " : " + ");
    surd(abs(b_));
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) { return os << x.to_string(); }

}  // namespace gosset
