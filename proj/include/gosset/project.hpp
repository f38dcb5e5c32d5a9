// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_PROJECT_HPP
#define GOSSET_PROJECT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gosset/coxplane.hpp"
#include "gosset/linalg.hpp"
#include "gosset/roots.hpp"

namespace gosset {

enum class ProjectionMode { Orthogonal, Skew };

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  std::size_t source = 0;  // index into the projected vector list
};

struct OrthoBasis {
  Vector i_hat;  // gamma1 / sqrt2
  Vector j_hat;  // (gamma2/sqrt2 + (c/2) gamma1/sqrt2) / sin(pi/h)
};

/// Orthonormal frame of the Coxeter plane; sin(pi/h) is taken as
/// sqrt(1 - c^2/4) so the frame stays orthonormal for any Perron value c.
OrthoBasis ortho_basis(const CoxeterPlane& plane);

PlanarPoint project_orthogonal(const CoxeterPlane& plane, const Vector& v, std::size_t source = 0);

/// Oblique image Lambda1 gamma1/sqrt2 + Lambda2 gamma2/sqrt2 with covariant
/// components Lambda_k = v . gamma_k / sqrt2, drawn with gamma1 along the
/// x-axis: x = Lambda1 - (c/2) Lambda2, y = Lambda2 sqrt(1 - c^2/4). The
/// radius is (Lambda1^2 + Lambda2^2 - c Lambda1 Lambda2)^(1/2).
PlanarPoint project_skew(const CoxeterPlane& plane, const Vector& v, std::size_t source = 0);

std::vector<PlanarPoint> project_all(const CoxeterPlane& plane, std::span<const Vector> vs,
                                     ProjectionMode mode);

struct Circle {
  double radius = 0.0;
  std::vector<PlanarPoint> members;  // ascending angle, then source index
  std::size_t count() const { return members.size(); }
};

struct CircleSpectrum {
  ProjectionMode mode = ProjectionMode::Orthogonal;
  std::vector<Circle> circles;  // ascending radius
  std::size_t point_count() const;
  std::vector<double> radii() const;
};

/// Groups points into concentric circles: single linkage over the sorted
/// radii with relative gap rel_tol (absolute rel_tol near the origin). Each
/// circle's radius is the mean of its members.
CircleSpectrum circle_spectrum(std::span<const PlanarPoint> points, ProjectionMode mode,
                               double rel_tol = 1e-6);

/// Angle of a point in [0, 2pi).
double angle_of(const PlanarPoint& p);

/// omega_j = sum_k (C^-1)_{jk} alpha_k, so alpha_i . omega_j = delta_ij.
/// Throws Singular for a singular Gram matrix.
std::vector<Vector> fundamental_weights(const RootSystem& rs);

}  // namespace gosset

#endif  // GOSSET_PROJECT_HPP
