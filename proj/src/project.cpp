// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/project.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gosset/error.hpp"

namespace gosset {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double plane_sine(const CoxeterPlane& plane) {
  return std::sqrt(std::max(0.0, 1.0 - plane.c * plane.c / 4.0));
}

PlanarPoint make_point(double x, double y, std::size_t source) {
  return {x, y, std::hypot(x, y), source};
}

}  // namespace

OrthoBasis ortho_basis(const CoxeterPlane& plane) {
  const Vector g1 = plane.gamma1 / kSqrt2;
  const Vector g2 = plane.gamma2 / kSqrt2;
  const double s = plane_sine(plane);
  OrthoBasis b{g1, Vector(g1.dim())};
  if (s > 0.0) b.j_hat = (g2 + g1 * (plane.c / 2.0)) / s;
  return b;
}

PlanarPoint project_orthogonal(const CoxeterPlane& plane, const Vector& v, std::size_t source) {
  const OrthoBasis b = ortho_basis(plane);
  return make_point(v.dot(b.i_hat), v.dot(b.j_hat), source);
}

PlanarPoint project_skew(const CoxeterPlane& plane, const Vector& v, std::size_t source) {
  const double l1 = v.dot(plane.gamma1) / kSqrt2;
  const double l2 = v.dot(plane.gamma2) / kSqrt2;
  return make_point(l1 - plane.c / 2.0 * l2, l2 * plane_sine(plane), source);
}

std::vector<PlanarPoint> project_all(const CoxeterPlane& plane, std::span<const Vector> vs,
                                     ProjectionMode mode) {
  std::vector<PlanarPoint> out;
  out.reserve(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    out.push_back(mode == ProjectionMode::Orthogonal ? project_orthogonal(plane, vs[k], k)
                                                     : project_skew(plane, vs[k], k));
  return out;
}

double angle_of(const PlanarPoint& p) {
  double a = std::atan2(p.y, p.x);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  // Snap -0 and 2pi rounding back to the start of the range.
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

std::size_t CircleSpectrum::point_count() const {
  std::size_t n = 0;
  for (const auto& c : circles) n += c.count();
  return n;
}

std::vector<double> CircleSpectrum::radii() const {
  std::vector<double> r;
  for (const auto& c : circles) r.push_back(c.radius);
  return r;
}

CircleSpectrum circle_spectrum(std::span<const PlanarPoint> points, ProjectionMode mode, double rel_tol) {
  CircleSpectrum out;
  out.mode = mode;
  std::vector<PlanarPoint> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
    return a.radius < b.radius || (a.radius == b.radius && a.source < b.source);
  });
  for (const auto& p : sorted) {
    if (!out.circles.empty()) {
      const double prev = out.circles.back().members.back().radius;
      if (p.radius - prev <= rel_tol * std::max(1.0, p.radius)) {
        out.circles.back().members.push_back(p);
        continue;
      }
    }
    out.circles.push_back({0.0, {p}});
  }
  for (auto& c : out.circles) {
    double sum = 0.0;
    for (const auto& p : c.members) sum += p.radius;
    c.radius = sum / static_cast<double>(c.members.size());
    std::stable_sort(c.members.begin(), c.members.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
      const double ta = a.radius == 0.0 ? 0.0 : angle_of(a);
      const double tb = b.radius == 0.0 ? 0.0 : angle_of(b);
      if (std::abs(ta - tb) > 1e-12) return ta < tb;
      return a.source < b.source;
    });
  }
  return out;
}

std::vector<Vector> fundamental_weights(const RootSystem& rs) {
  const Matrix inv = inverse(rs.gram());
  std::vector<Vector> out;
  for (int j = 0; j < rs.rank(); ++j) {
    Vector w(rs.simples().front().dim());
    for (int k = 0; k < rs.rank(); ++k) w += rs.simples()[k] * inv(j, k);
    out.push_back(w);
  }
  return out;
}

}  // namespace gosset
