// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "gosset/coxplane.hpp"
#include "gosset/folding.hpp"
#include "gosset/masses.hpp"
#include "gosset/project.hpp"

using namespace gosset;

namespace {

constexpr double kPi = std::numbers::pi;
const double kTau = std::numbers::phi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct E8Data {
  RootSystem rs = enumerate_roots(build_diagram("E8"));
  CoxeterPlane plane = build_coxeter_plane(rs);
  CircleSpectrum ortho = circle_spectrum(project_all(plane, rs.roots(), ProjectionMode::Orthogonal),
                                         ProjectionMode::Orthogonal);
  std::vector<double> skew_simple_radii() const {
    std::vector<double> r;
    for (const auto& a : rs.simples()) r.push_back(project_skew(plane, a).radius);
    std::sort(r.begin(), r.end());
    return r;
  }
};

const E8Data& e8() {
  static const E8Data d;
  return d;
}

std::vector<double> zam() {
  const auto m = zamolodchikov_spectrum(1.0).masses;
  return {m.begin(), m.end()};
}

Outcome perron_data() {
  const CoxeterPlane p = build_coxeter_plane(enumerate_roots(build_diagram("H4")));
  const double reference[4] = {0.3204, 0.6373, 0.9473, 0.7706};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(p.z[i] - reference[i]));
  const double dc = std::abs(p.c - 2.0 * std::cos(kPi / 30.0));
  return {worst <= 5e-4 && dc <= 1e-12, fmt("max |z - ref| %.2e", worst) + fmt(", |c - 2cos(pi/30)| %.2e", dc)};
}

Outcome skew_radii() {
  const double reference[8] = {0.4745, 0.7678, 0.9438, 1.141, 1.403, 1.527, 1.846, 2.270};
  const auto r = e8().skew_simple_radii();
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(r[k] - reference[k]));
  return {worst <= 5e-4, fmt("max abs deviation %.2e", worst)};
}

Outcome gosset_circles() {
  const CircleSpectrum& cs = e8().ortho;
  bool ok = cs.circles.size() == 8;
  double spread = 0.0, gap = 0.0;
  for (const auto& c : cs.circles) {
    ok = ok && c.count() == 30;
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      spread = std::max(spread, std::abs(c.members[k].radius - c.radius) / c.radius);
      const double step = angle_of(c.members[(k + 1) % c.members.size()]) - angle_of(c.members[k]);
      gap = std::max(gap, std::abs(std::remainder(step - 2.0 * kPi / 30.0, 2.0 * kPi)));
    }
  }
  ok = ok && spread < 1e-9 && gap < 1e-6;
  return {ok, std::to_string(cs.circles.size()) + " circles" + fmt(", spread %.2e", spread) +
                  fmt(", angular gap error %.2e", gap)};
}

Outcome tau_ladder() {
  double worst = 0.0;
  for (const auto& r : {e8().ortho.radii(), e8().skew_simple_radii()}) {
    if (r.size() != 8) return {false, "expected 8 radii"};
    for (auto [hi, lo] : {std::pair{1, 0}, {5, 2}, {6, 3}, {7, 4}})
      worst = std::max(worst, std::abs(r[hi] / r[lo] - kTau));
  }
  return {worst < 1e-9, fmt("max |ratio - tau| %.2e over both modes", worst)};
}

Outcome mass_identities() {
  const auto r = e8().skew_simple_radii();
  const double e3 = std::abs(r[2] - 2.0 * r[0] * std::cos(kPi / 30.0)) / r[2];
  const double e4 = std::abs(r[3] - 2.0 * r[1] * std::cos(7.0 * kPi / 30.0)) / r[3];
  const double e5 = std::abs(r[4] - 2.0 * r[1] * std::cos(2.0 * kPi / 15.0)) / r[4];
  const double worst = std::max({e3, e4, e5});
  return {worst < 1e-9, fmt("max relative deviation %.2e", worst)};
}

Outcome three_routes() {
  const auto a = zam();
  const auto b = toda_masses(toda_mass_matrix(e8().rs));
  const auto c = e8().ortho.radii();
  if (c.size() != 8) return {false, "expected 8 Gosset radii"};
  const double ab = ratio_report(a, b).max_rel_dev;
  const double ac = ratio_report(a, c).max_rel_dev;
  const double bc = ratio_report(b, c).max_rel_dev;
  const std::vector<double> z(e8().plane.z.coords().begin(), e8().plane.z.coords().end());
  const double za = ratio_report(z, a).max_rel_dev;
  const double worst = std::max({ab, ac, bc, za});
  return {worst < 1e-9, fmt("zam/toda %.1e", ab) + fmt(", zam/gosset %.1e", ac) + fmt(", toda/gosset %.1e", bc) +
                            fmt(", perron/zam %.1e", za)};
}

Outcome block_diagonal() {
  const GoldenMatrix b = block_diagonalize(fold_e8_to_h4(e8().rs));
  const GoldenMatrix upper = exact_gram(build_diagram("H4"));
  const GoldenMatrix lower = exact_gram(build_diagram("H4'"));
  int zeros = 0;
  bool blocks = true;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if ((i < 4) != (j < 4))
        zeros += b(i, j).is_zero();
      else if (i < 4)
        blocks = blocks && b(i, j) == upper(i, j);
      else
        blocks = blocks && b(i, j) == lower(i - 4, j - 4);
    }
  return {zeros == 32 && blocks, std::to_string(zeros) + "/32 off-block entries exactly zero, diagonal blocks " +
                                     (blocks ? "exact" : "differ")};
}

Outcome n_singular() {
  const TodaMassMatrix t = toda_mass_matrix(e8().rs);
  const auto em = jacobi_eigen(t.m).values;
  const auto en = jacobi_eigen(t.n).values;
  int small = 0;
  std::vector<double> rest;
  for (double x : en) {
    if (std::abs(x) < 1e-9)
      ++small;
    else
      rest.push_back(x);
  }
  double worst = rest.size() == 8 ? 0.0 : INFINITY;
  for (std::size_t k = 0; k < rest.size() && k < 8; ++k) worst = std::max(worst, std::abs(rest[k] - em[k]));
  return {small == 1 && worst < 1e-9, std::to_string(small) + " null eigenvalue(s)" + fmt(", max |N - M| %.2e", worst)};
}

Outcome h4_circles() {
  const RootSystem rs = enumerate_roots(build_diagram("H4"));
  const CoxeterPlane p = build_coxeter_plane(rs);
  const CircleSpectrum cs = circle_spectrum(project_all(p, rs.roots(), ProjectionMode::Orthogonal),
                                            ProjectionMode::Orthogonal);
  bool ok = cs.circles.size() == 4;
  for (const auto& c : cs.circles) ok = ok && c.count() == 30;
  if (!ok) return {false, std::to_string(cs.circles.size()) + " circles"};
  const auto m = zam();
  const double r1 = ratio_report(cs.radii(), std::vector<double>{m[0], m[2], m[3], m[4]}).max_rel_dev;
  const double r2 = ratio_report(cs.radii(), std::vector<double>{p.z[0], p.z[1], p.z[3], p.z[2]}).max_rel_dev;
  const double worst = std::max(r1, r2);
  return {worst < 1e-9, "4 circles of 30" + fmt(", max relative deviation %.2e", worst)};
}

Outcome weights() {
  std::vector<double> norms;
  for (const auto& w : fundamental_weights(e8().rs)) norms.push_back(project_orthogonal(e8().plane, w).radius);
  const double worst = ratio_report(norms, zam()).max_rel_dev;
  return {worst < 1e-9, fmt("max relative deviation %.2e", worst)};
}

Outcome generality() {
  const std::map<std::string, std::size_t> counts{{"A2", 6}, {"A3", 12}, {"D4", 24},
                                                  {"E6", 72}, {"E7", 126}, {"H3", 30}};
  std::string bad;
  for (const auto& [name, count] : counts) {
    const RootSystem rs = enumerate_roots(build_diagram(name));
    const CoxeterPlane p = build_coxeter_plane(rs);
    const auto orbits = orbit_decomposition(rs, dihedral_generators(p, rs));
    std::vector<int> seen(rs.roots().size(), 0);
    bool ok = rs.roots().size() == count && p.h_spectral == p.h && p.h > 0 &&
              orbits.size() == static_cast<std::size_t>(rs.rank());
    for (const auto& o : orbits) {
      ok = ok && o.members.size() == static_cast<std::size_t>(p.h);
      for (std::size_t i : o.root_indices) ++seen[i];
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    if (!ok) bad += " " + name;
  }
  return {bad.empty(), bad.empty() ? "A2 A3 D4 E6 E7 H3" : "failed:" + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"H4 Perron data", perron_data},
      {"E8 skew radii", skew_radii},
      {"Gosset circles", gosset_circles},
      {"tau ladder", tau_ladder},
      {"mass-relation identities", mass_identities},
      {"three-route agreement", three_routes},
      {"exact block diagonalization", block_diagonal},
      {"N-matrix singularity", n_singular},
      {"H4 600-cell circles", h4_circles},
      {"fundamental weights", weights},
      {"generality smoke test", generality},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s %2zu  %-28s %s\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
