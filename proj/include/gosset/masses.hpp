// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_MASSES_HPP
#define GOSSET_MASSES_HPP

#include <array>
#include <span>
#include <vector>

#include "gosset/linalg.hpp"
#include "gosset/roots.hpp"

namespace gosset {

/// The eight E8 bound-state masses, ascending.
struct MassSpectrum {
  std::array<double, 8> masses{};
  double m1 = 1.0;
};

/// m2 = tau m1, m3 = 2 m1 cos(pi/30), m4 = 2 m2 cos(7pi/30),
/// m5 = 2 m2 cos(2pi/15), m6 = tau m3, m7 = tau m4, m8 = tau m5.
/// Throws InvalidArgument unless m1 > 0.
MassSpectrum zamolodchikov_spectrum(double m1);

/// Affine Toda mass matrices at unit mass scale.
struct TodaMassMatrix {
  Matrix m;                // 8x8: sum_{i=0}^{8} n_i alpha_i alpha_i^T, alpha_0 = -theta
  Matrix n;                // 9x9: sqrt(n_i n_j) alpha_i . alpha_j
  std::vector<int> marks;  // n_0 = 1, n_1..n_8
  std::vector<Vector> affine_roots;  // alpha_0..alpha_8
};

/// Built from the computed highest root; throws WrongType unless rs is E8.
TodaMassMatrix toda_mass_matrix(const RootSystem& rs);

/// Square roots of the eigenvalues of M, ascending.
std::vector<double> toda_masses(const TodaMassMatrix& t);

struct RatioReport {
  double max_rel_dev = 0.0;
  std::vector<std::size_t> pairing_a;  // position k of sorted a came from a[pairing_a[k]]
  std::vector<std::size_t> pairing_b;
  std::vector<double> ratios_a;        // sorted a / sorted a[0]
  std::vector<double> ratios_b;
};

/// Sorts both lists, normalizes each by its smallest entry and reports the
/// largest componentwise relative deviation. Throws InvalidArgument on a
/// length mismatch, an empty list or a nonpositive entry.
RatioReport ratio_report(std::span<const double> a, std::span<const double> b);

}  // namespace gosset

#endif  // GOSSET_MASSES_HPP
