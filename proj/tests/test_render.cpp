#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <sstream>

#include "gosset/coxplane.hpp"
#include "gosset/error.hpp"
#include "gosset/render.hpp"

using namespace gosset;
namespace pt = boost::property_tree;

namespace {

CircleSpectrum spectrum_of(const char* name) {
  const RootSystem rs = enumerate_roots(build_diagram(name));
  const CoxeterPlane p = build_coxeter_plane(rs);
  return circle_spectrum(project_all(p, rs.roots(), ProjectionMode::Orthogonal), ProjectionMode::Orthogonal);
}

pt::ptree parse(const std::string& doc) {
  std::istringstream in(doc);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

struct Counts {
  int outlines = 0;
  int disks = 0;
  int texts = 0;
  std::vector<double> outline_r;
};

void walk(const pt::ptree& node, Counts& c) {
  for (const auto& [tag, child] : node) {
    if (tag == "circle") {
      const std::string cls = child.get<std::string>("<xmlattr>.class", "");
      if (cls == "orbit") {
        ++c.outlines;
        c.outline_r.push_back(child.get<double>("<xmlattr>.r"));
      } else if (cls == "point") {
        ++c.disks;
      }
    } else if (tag == "text") {
      ++c.texts;
    }
    if (tag != "<xmlattr>") walk(child, c);
  }
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("E8 document") {
  const CircleSpectrum cs = spectrum_of("E8");
  const std::string doc = render_spectrum(cs);
  const pt::ptree tree = parse(doc);
  CHECK(tree.get<std::string>("svg.<xmlattr>.version") == "1.1");
  CHECK(tree.get<int>("svg.<xmlattr>.width") == 640);
  Counts c;
  walk(tree, c);
  CHECK(c.outlines == 8);
  CHECK(c.disks == 240);
  CHECK(c.texts == 0);
  // radii re-parse within half a pixel
  const double scale = svg_scale(cs, 640);
  REQUIRE(c.outline_r.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(std::abs(c.outline_r[k] - cs.circles[k].radius * scale) < 0.5);
}

TEST_CASE("H4 document") {
  Counts c;
  walk(parse(render_spectrum(spectrum_of("H4"), {320, true})), c);
  CHECK(c.outlines == 4);
  CHECK(c.disks == 120);
  CHECK(c.texts == 4);
}

TEST_CASE("empty spectrum") {
  const std::string doc = render_spectrum(CircleSpectrum{});
  Counts c;
  walk(parse(doc), c);
  CHECK(c.outlines == 0);
  CHECK(c.disks == 0);
}

TEST_CASE("points stay inside the canvas") {
  const CircleSpectrum cs = spectrum_of("E7");
  const double scale = svg_scale(cs, 200);
  for (const auto& circle : cs.circles) CHECK(circle.radius * scale < 100.0);
}

TEST_CASE("deterministic and sized") {
  const CircleSpectrum cs = spectrum_of("D4");
  CHECK(render_spectrum(cs) == render_spectrum(cs));
  CHECK_THROWS_AS(render_spectrum(cs, {63, false}), Error);
}

}
