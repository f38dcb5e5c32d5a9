// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_RENDER_HPP
#define GOSSET_RENDER_HPP

#include <string>
#include <vector>

#include "gosset/project.hpp"

namespace gosset {

struct SvgOptions {
  int size = 640;       // square canvas, pixels; at least 64
  bool labels = false;  // radius annotations at angle 0
};

/// Static SVG 1.1 drawing of a circle spectrum: one outline per circle, one
/// filled disk per point, y axis pointing up. Scaled so the outermost circle
/// sits at 1/1.1 of the half-width. Throws InvalidArgument for size < 64.
std::string render_spectrum(const CircleSpectrum& cs, const SvgOptions& opts = {});

/// Pixel scale used by render_spectrum (pixels per unit length).
double svg_scale(const CircleSpectrum& cs, int size);

}  // namespace gosset

#endif  // GOSSET_RENDER_HPP
