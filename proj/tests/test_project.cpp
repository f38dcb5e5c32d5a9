#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "gosset/coxplane.hpp"
#include "gosset/error.hpp"
#include "gosset/project.hpp"

using namespace gosset;

namespace {

constexpr double kPi = std::numbers::pi;

struct Fixture {
  explicit Fixture(const char* name) : rs(enumerate_roots(build_diagram(name))), plane(build_coxeter_plane(rs)) {}
  RootSystem rs;
  CoxeterPlane plane;
};

const Fixture& e8() {
  static const Fixture f("E8");
  return f;
}

// Orthogonal projection radius onto span(gamma1, gamma2) through a QR factorization.
double qr_radius(const CoxeterPlane& p, const Vector& v) {
  const int n = static_cast<int>(v.dim());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    a(i, 0) = p.gamma1[i];
    a(i, 1) = p.gamma2[i];
    x(i) = v[i];
  }
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ() * Eigen::MatrixXd::Identity(n, 2);
  return (q.transpose() * x).norm();
}

}  // namespace

TEST_SUITE("project") {

TEST_CASE("orthogonal radii match a QR projection") {
  for (const char* name : {"A3", "D4", "E6", "E8", "H3", "H4"}) {
    CAPTURE(name);
    const Fixture f(name);
    for (std::size_t k = 0; k < f.rs.roots().size(); ++k) {
      const Vector& v = f.rs.roots()[k];
      const PlanarPoint p = project_orthogonal(f.plane, v, k);
      CHECK(p.source == k);
      CHECK(std::abs(p.radius - qr_radius(f.plane, v)) < 1e-12);
      CHECK(std::hypot(p.x, p.y) == doctest::Approx(p.radius).epsilon(1e-14));
    }
  }
}

TEST_CASE("orthonormal frame") {
  const OrthoBasis b = ortho_basis(e8().plane);
  CHECK(b.i_hat.norm2() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.j_hat.norm2() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(b.i_hat.dot(b.j_hat)) < 1e-14);
  const PlanarPoint g1 = project_orthogonal(e8().plane, e8().plane.gamma1);
  CHECK(g1.x == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(g1.y) < 1e-14);
}

TEST_CASE("E8 skew radii of the simple roots") {
  const double reference[8] = {0.4745, 0.7678, 0.9438, 1.141, 1.403, 1.527, 1.846, 2.270};
  std::vector<double> r;
  for (const auto& a : e8().rs.simples()) r.push_back(project_skew(e8().plane, a).radius);
  std::sort(r.begin(), r.end());
  for (int k = 0; k < 8; ++k) CHECK(std::abs(r[k] - reference[k]) < 5e-4);
}

TEST_CASE("skew radius closed form") {
  const auto& p = e8().plane;
  for (const auto& v : e8().rs.roots()) {
    const double l1 = v.dot(p.gamma1) / std::sqrt(2.0);
    const double l2 = v.dot(p.gamma2) / std::sqrt(2.0);
    const double want = std::sqrt(std::max(0.0, l1 * l1 + l2 * l2 - p.c * l1 * l2));
    CHECK(std::abs(project_skew(p, v).radius - want) < 1e-12);
  }
}

TEST_CASE("skew mode splits some orbit over several radii") {
  const auto& f = e8();
  const auto orbits = orbit_decomposition(f.rs, dihedral_generators(f.plane, f.rs));
  int spread_orbits = 0;
  for (const auto& o : orbits) {
    double lo = INFINITY, hi = 0;
    for (const auto& v : o.members) {
      const double r = project_skew(f.plane, v).radius;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    spread_orbits += hi - lo > 1e-6 * hi;
  }
  CHECK(spread_orbits >= 1);
}

TEST_CASE("tau ladder on simple roots") {
  const double tau = std::numbers::phi;
  const auto& f = e8();
  for (auto proj : {project_orthogonal, project_skew}) {
    auto r = [&](int i) { return proj(f.plane, f.rs.simples()[i - 1], 0).radius; };
    CHECK(std::abs(r(7) / r(1) - tau) < 1e-9);
    CHECK(std::abs(r(6) / r(2) - tau) < 1e-9);
    CHECK(std::abs(r(4) / r(8) - tau) < 1e-9);
    CHECK(std::abs(r(5) / r(3) - tau) < 1e-9);
  }
}

TEST_CASE("projection is linear") {
  const auto& p = e8().plane;
  const auto& roots = e8().rs.roots();
  for (std::size_t k = 0; k + 1 < roots.size(); k += 7) {
    const Vector sum = roots[k] * 2.0 + roots[k + 1] * -0.5;
    for (auto proj : {project_orthogonal, project_skew}) {
      const PlanarPoint a = proj(p, roots[k], 0), b = proj(p, roots[k + 1], 0), s = proj(p, sum, 0);
      CHECK(std::abs(s.x - (2.0 * a.x - 0.5 * b.x)) < 1e-12);
      CHECK(std::abs(s.y - (2.0 * a.y - 0.5 * b.y)) < 1e-12);
    }
  }
}

TEST_CASE("Gosset circles") {
  const auto pts = project_all(e8().plane, e8().rs.roots(), ProjectionMode::Orthogonal);
  const CircleSpectrum cs = circle_spectrum(pts, ProjectionMode::Orthogonal);
  REQUIRE(cs.circles.size() == 8);
  CHECK(cs.point_count() == 240);
  for (const auto& c : cs.circles) {
    CHECK(c.count() == 30);
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      CHECK(std::abs(c.members[k].radius - c.radius) <= 1e-9 * c.radius);
      const double next = angle_of(c.members[(k + 1) % 30]);
      const double gap = std::remainder(next - angle_of(c.members[k]) - 2 * kPi / 30, 2 * kPi);
      CHECK(std::abs(gap) < 1e-6);
    }
  }
  const auto radii = cs.radii();
  CHECK(std::is_sorted(radii.begin(), radii.end()));
}

TEST_CASE("rotation by the Coxeter element") {
  const auto& f = e8();
  const Matrix rot = dihedral_generators(f.plane, f.rs).rotation();
  double turn = 0.0;
  for (std::size_t k = 0; k < f.rs.roots().size(); ++k) {
    const PlanarPoint a = project_orthogonal(f.plane, f.rs.roots()[k]);
    const PlanarPoint b = project_orthogonal(f.plane, rot * f.rs.roots()[k]);
    const double d = std::remainder(angle_of(b) - angle_of(a), 2 * kPi);
    if (k == 0) turn = d;
    CHECK(std::abs(d - turn) < 1e-9);
    CHECK(std::abs(a.radius - b.radius) < 1e-11);
  }
  CHECK(std::abs(std::abs(turn) - 2 * kPi / 30) < 1e-9);
}

TEST_CASE("fundamental weights") {
  const auto& f = e8();
  const auto w = fundamental_weights(f.rs);
  REQUIRE(w.size() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(std::abs(w[i].dot(f.rs.simples()[j]) - (i == j)) < 1e-12);
}

TEST_CASE("circle grouping") {
  std::vector<PlanarPoint> pts;
  auto add = [&](double r, double a, std::size_t src) { pts.push_back({r * std::cos(a), r * std::sin(a), r, src}); };
  add(1.0, 0.5, 0);
  add(1.0 + 1e-8, -0.5, 1);
  add(2.0, 0.0, 2);
  add(1.5, 1.0, 3);
  add(1.5, 1.0, 4);
  const CircleSpectrum cs = circle_spectrum(pts, ProjectionMode::Skew);
  REQUIRE(cs.circles.size() == 3);
  CHECK(cs.circles[0].count() == 2);
  CHECK(cs.circles[0].members[0].source == 0);  // angles run over [0, 2pi)
  CHECK(cs.circles[1].members[0].source == 3);  // tie broken by source
  CHECK(cs.circles[2].radius == 2.0);
  CHECK(cs.mode == ProjectionMode::Skew);
  CHECK(circle_spectrum({}, ProjectionMode::Orthogonal).circles.empty());
  // a looser tolerance merges neighbouring radii
  CHECK(circle_spectrum(pts, ProjectionMode::Skew, 0.6).circles.size() == 1);
}

TEST_CASE("H4 circles") {
  const Fixture f("H4");
  const CircleSpectrum cs = circle_spectrum(project_all(f.plane, f.rs.roots(), ProjectionMode::Orthogonal),
                                            ProjectionMode::Orthogonal);
  REQUIRE(cs.circles.size() == 4);
  for (const auto& c : cs.circles) CHECK(c.count() == 30);
}

}
