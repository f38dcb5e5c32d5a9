// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_COXPLANE_HPP
#define GOSSET_COXPLANE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gosset/diagrams.hpp"
#include "gosset/linalg.hpp"
#include "gosset/roots.hpp"

namespace gosset {

struct PerronPair {
  double c = 0.0;  // largest eigenvalue
  Vector z;        // strictly positive eigenvector
  int iterations = 0;
};

/// Perron pair of a symmetric matrix with nonnegative off-diagonal entries
/// and irreducible sparsity pattern (here M = 2I - C).
///
/// Power iteration on M + 2I. The Collatz-Wielandt quotients
/// min_i (Bx)_i/x_i <= lambda <= max_i (Bx)_i/x_i bracket the eigenvalue; the
/// iteration stops once the bracket is narrower than 1e-12 and reports the
/// Rayleigh quotient. z is scaled so that sum_{i in color_a} z_i^2 = 1.
///
/// Throws Disconnected for a reducible pattern, InvalidArgument for a
/// negative off-diagonal entry, NoConvergence after `max_iterations`.
PerronPair perron_eigenvector(const Matrix& m, std::span<const int> color_a,
                              int max_iterations = 100'000);

/// Invariant plane of the bipartite Coxeter element.
struct CoxeterPlane {
  double c = 0.0;  // 2cos(pi/h)
  Vector z;        // per-node coefficients, indexed like the simple roots
  Vector gamma1;   // sum over color_a of z_i alpha_i
  Vector gamma2;   // sum over color_b of z_i alpha_i
  std::vector<int> color_a;
  std::vector<int> color_b;
  int h = 0;           // |roots| / rank
  int h_spectral = 0;  // round(pi / arccos(c/2))
};

CoxeterPlane build_coxeter_plane(const RootSystem& rs);

struct DihedralGenerators {
  Matrix s1;  // product of the color_a reflections
  Matrix s2;  // product of the color_b reflections
  Matrix rotation() const { return s1 * s2; }
};

DihedralGenerators dihedral_generators(const CoxeterPlane& plane, const RootSystem& rs);

/// Smallest k in [1, cap] with m^k = I within tol, or 0.
int matrix_order(const Matrix& m, int cap = 1000, double tol = 1e-9);

struct Orbit {
  int label = 0;       // simple root index
  int label_sign = 1;  // +1 when alpha_label itself lies in the orbit
  std::vector<std::size_t> root_indices;  // into rs.roots(), in rotation order
  std::vector<Vector> members;
};

/// Orbits of the rotation S1 S2 on the root set, ordered by label.
///
/// Every orbit has h members and holds exactly one root of the signed simple
/// transversal {+alpha_i : i in color_a} U {-alpha_j : j in color_b}, which
/// fixes its label. When S1 S2 has -1 among its powers (E8, E7, D4, H3, H4)
/// these are also the orbits of the full dihedral group <S1, S2> and each one
/// contains alpha_label itself. Throws Internal if the transversal property
/// fails.
std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const DihedralGenerators& gens);

/// Orbits of the full dihedral group <S1, S2>, each given as sorted indices
/// into rs.roots(), ordered by smallest index.
std::vector<std::vector<std::size_t>> dihedral_orbits(const RootSystem& rs, const DihedralGenerators& gens);

}  // namespace gosset

#endif  // GOSSET_COXPLANE_HPP
