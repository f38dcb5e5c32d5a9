// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_SERIALIZE_HPP
#define GOSSET_SERIALIZE_HPP

#include <string>

#include "gosset/project.hpp"

namespace gosset {

/// Magnitudes below this serialize as 0.
inline constexpr double kZeroSnap = 1e-12;

/// Shortest round-trip decimal of x after rounding to 12 significant digits.
std::string format_float(double x);

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double x);

struct SpectrumHeader {
  std::string group;
  double c = 0.0;
  int h = 0;
};

const char* mode_name(ProjectionMode mode);

/// {"group","mode","c","h","circles":[{"radius","count","points":[{"x","y","source"}]}]}
/// with keys in that order and 12-digit floats.
std::string spectrum_to_json(const CircleSpectrum& cs, const SpectrumHeader& header);

/// Header circle_index,radius,x,y,source then one row per point.
std::string spectrum_to_csv(const CircleSpectrum& cs);

}  // namespace gosset

#endif  // GOSSET_SERIALIZE_HPP
