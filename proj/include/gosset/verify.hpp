// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_VERIFY_HPP
#define GOSSET_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "gosset/diagrams.hpp"

namespace gosset {

/// Four-digit reference values of the oblique simple-root radii of E8.
inline constexpr std::array<double, 8> kReferenceSkewRadii{0.4745, 0.7678, 0.9438, 1.141,
                                                           1.403,  1.527,  1.846,  2.270};
/// Four-digit reference Perron components of 2I - C for H4.
inline constexpr std::array<double, 4> kReferenceH4Perron{0.3204, 0.6373, 0.9473, 0.7706};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every structural invariant that applies to the diagram: root system,
/// Coxeter plane, orbits and projections for any finite type; folding, Toda
/// and mass-spectrum checks for E8; the 600-cell circle check for H4.
/// Computation errors are reported as failed checks, never thrown.
std::vector<CheckResult> run_invariant_suite(const CoxeterDiagram& d);

}  // namespace gosset

#endif  // GOSSET_VERIFY_HPP
