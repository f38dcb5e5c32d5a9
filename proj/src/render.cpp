// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gosset/error.hpp"

namespace gosset {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

double svg_scale(const CircleSpectrum& cs, int size) {
  double r = 0.0;
  for (const auto& c : cs.circles)
    for (const auto& p : c.members) r = std::max(r, p.radius);
  if (r <= 0.0) return 1.0;
  return (size / 2.0) / (1.1 * r);
}

std::string render_spectrum(const CircleSpectrum& cs, const SvgOptions& opts) {
  if (opts.size < 64) throw Error(ErrorCode::InvalidArgument, "SVG size must be at least 64 px");
  const double half = opts.size / 2.0;
  const double scale = svg_scale(cs, opts.size);
  const std::string s = std::to_string(opts.size);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << s << "\" height=\"" << s
     << "\" viewBox=\"0 0 " << s << ' ' << s << "\">\n";
  os << "  <g id=\"axes\">\n"
     << "    <circle class=\"origin\" cx=\"" << num(half) << "\" cy=\"" << num(half)
     << "\" r=\"1.5\" fill=\"#444444\"/>\n"
     << "  </g>\n";

  os << "  <g id=\"circles\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"0.75\">\n";
  for (const auto& c : cs.circles)
    os << "    <circle class=\"orbit\" cx=\"" << num(half) << "\" cy=\"" << num(half) << "\" r=\""
       << num(c.radius * scale) << "\"/>\n";
  os << "  </g>\n";

  os << "  <g id=\"points\" fill=\"#b22222\">\n";
  for (const auto& c : cs.circles)
    for (const auto& p : c.members)
      os << "    <circle class=\"point\" cx=\"" << num(half + p.x * scale) << "\" cy=\""
         << num(half - p.y * scale) << "\" r=\"2.5\"/>\n";
  os << "  </g>\n";

  if (opts.labels) {
    os << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#333333\">\n";
    for (const auto& c : cs.circles) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", c.radius);
      os << "    <text x=\"" << num(half + c.radius * scale + 3.0) << "\" y=\"" << num(half - 3.0) << "\">"
         << buf << "</text>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gosset
