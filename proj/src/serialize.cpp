// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace gosset {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < kZeroSnap) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_float(double x) {
  // nlohmann emits the shortest representation that round-trips.
  return nlohmann::json(round12(x)).dump();
}

const char* mode_name(ProjectionMode mode) {
  return mode == ProjectionMode::Orthogonal ? "ortho" : "skew";
}

std::string spectrum_to_json(const CircleSpectrum& cs, const SpectrumHeader& header) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["group"] = header.group;
  doc["mode"] = mode_name(cs.mode);
  doc["c"] = round12(header.c);
  doc["h"] = header.h;
  ojson circles = ojson::array();
  for (const auto& c : cs.circles) {
    ojson circle;
    circle["radius"] = round12(c.radius);
    circle["count"] = c.count();
    ojson points = ojson::array();
    for (const auto& p : c.members) {
      ojson pt;
      pt["x"] = round12(p.x);
      pt["y"] = round12(p.y);
      pt["source"] = p.source;
      points.push_back(std::move(pt));
    }
    circle["points"] = std::move(points);
    circles.push_back(std::move(circle));
  }
  doc["circles"] = std::move(circles);
  return doc.dump(2) + "\n";
}

std::string spectrum_to_csv(const CircleSpectrum& cs) {
  std::ostringstream os;
  os << "circle_index,radius,x,y,source\n";
  for (std::size_t k = 0; k < cs.circles.size(); ++k) {
    const auto& c = cs.circles[k];
    for (const auto& p : c.members)
      os << k << ',' << format_float(c.radius) << ',' << format_float(p.x) << ',' << format_float(p.y)
         << ',' << p.source << '\n';
  }
  return os.str();
}

}  // namespace gosset
