// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "gosset/coxplane.hpp"
#include "gosset/error.hpp"
#include "gosset/folding.hpp"
#include "gosset/masses.hpp"
#include "gosset/project.hpp"
#include "gosset/roots.hpp"

namespace gosset {

namespace {

constexpr double kPi = std::numbers::pi;
const double kTau = std::numbers::phi;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string dev(double x) { return fmt("max deviation %.3g", x); }

class Suite {
 public:
  void record(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }

  // Runs body; an exception becomes a failed check under `name`.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Largest deviation of a projected orbit from a single circle with uniformly
// spaced angles: (relative radial spread, worst angular gap error).
std::pair<double, double> circle_quality(const CoxeterPlane& plane, const Orbit& orbit) {
  std::vector<double> radii, angles;
  for (const auto& v : orbit.members) {
    const PlanarPoint p = project_orthogonal(plane, v);
    radii.push_back(p.radius);
    angles.push_back(angle_of(p));
  }
  const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  const double spread = (*hi - *lo) / *hi;
  std::sort(angles.begin(), angles.end());
  const double gap = 2.0 * kPi / static_cast<double>(angles.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const double next = k + 1 < angles.size() ? angles[k + 1] : angles.front() + 2.0 * kPi;
    worst = std::max(worst, std::abs(next - angles[k] - gap));
  }
  return {spread, worst};
}

std::vector<double> skew_simple_radii(const CoxeterPlane& plane, const RootSystem& rs) {
  std::vector<double> r;
  for (const auto& a : rs.simples()) r.push_back(project_skew(plane, a).radius);
  return r;
}

std::vector<double> ortho_simple_radii(const CoxeterPlane& plane, const RootSystem& rs) {
  std::vector<double> r;
  for (const auto& a : rs.simples()) r.push_back(project_orthogonal(plane, a).radius);
  return r;
}

// Orthogonal 8x8 matrix from a fixed-seed Gram-Schmidt.
Matrix random_orthogonal(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<Vector> basis;
  while (basis.size() < n) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
    for (const auto& b : basis) v -= b * v.dot(b);
    if (v.norm() < 1e-6) continue;
    basis.push_back(v / v.norm());
  }
  return Matrix::from_rows(basis);
}

void generic_checks(Suite& s, const CoxeterDiagram& d) {
  s.guard("diagram.gram_positive_definite", [&] {
    const auto minors = leading_minors(gram_matrix(d).to_matrix());
    const double least = *std::min_element(minors.begin(), minors.end());
    s.record("diagram.gram_positive_definite", least > 1e-9, fmt("smallest leading minor %.6g", least));
  });

  s.guard("diagram.bipartition", [&] {
    const Bipartition b = bipartition(d);
    bool ok = static_cast<int>(b.color_a.size() + b.color_b.size()) == d.rank() && !b.color_a.empty() &&
              b.color_a.front() == 0;
    for (const auto& e : d.edges()) {
      const bool ia = std::count(b.color_a.begin(), b.color_a.end(), e.i) > 0;
      const bool ja = std::count(b.color_a.begin(), b.color_a.end(), e.j) > 0;
      ok = ok && ia != ja;
    }
    s.record("diagram.bipartition", ok);
  });

  const RootSystem rs = enumerate_roots(d);
  const GramMatrix gram = gram_matrix(d);
  const std::size_t nroots = rs.roots().size();

  {
    double worst = 0.0;
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        worst = std::max(worst, std::abs(rs.simples()[i].dot(rs.simples()[j]) - gram(i, j)));
    s.record("roots.simple_gram", worst <= 1e-9, dev(worst));
  }
  {
    double worst = 0.0;
    for (const auto& v : rs.roots()) worst = std::max(worst, std::abs(v.norm2() - 2.0));
    s.record("roots.norm_sqrt2", worst <= 1e-9, std::to_string(nroots) + " roots, " + dev(worst));
  }
  {
    bool ok = true;
    for (const auto& v : rs.roots()) ok = ok && rs.find(-v).has_value();
    s.record("roots.symmetric", ok);
  }
  {
    bool ok = true;
    for (const auto& g : rs.generators())
      for (const auto& v : rs.roots()) ok = ok && rs.find(g * v).has_value();
    s.record("roots.closed_under_reflections", ok);
  }
  s.record("roots.count_multiple_of_rank", rs.coxeter_number() > 0,
           "h = " + std::to_string(rs.coxeter_number()));

  if (d.crystallographic()) {
    double worst = 0.0;
    for (const auto& v : rs.roots())
      for (const auto& a : rs.simples()) {
        const double p = v.dot(a);
        worst = std::max(worst, std::abs(p - std::round(p)));
      }
    s.record("roots.integral_pairings", worst <= 1e-9, dev(worst));
    if (d.connected())
      s.guard("roots.highest_root_marks", [&] {
        const HighestRoot top = highest_root(rs);
        int sum = 0;
        bool positive = true;
        for (int m : top.marks) {
          sum += m;
          positive = positive && m > 0;
        }
        s.record("roots.highest_root_marks", positive && sum == rs.coxeter_number() - 1,
                 "sum of marks " + std::to_string(sum));
      });
  }

  if (!d.connected()) return;
  const bool star = std::any_of(d.edges().begin(), d.edges().end(), [](const Edge& e) { return !e.m.is_integer(); });
  if (star) {
    s.record("coxplane.skipped", true, "fractional edge label");
    return;
  }

  const CoxeterPlane plane = build_coxeter_plane(rs);
  const int h = plane.h;
  const Matrix m = 2.0 * Matrix::identity(d.rank()) - gram.to_matrix();
  {
    const Vector r = m * plane.z - plane.z * plane.c;
    s.record("coxplane.perron_residual", r.max_abs() <= 1e-9, dev(r.max_abs()));
    bool positive = true;
    for (std::size_t i = 0; i < plane.z.dim(); ++i) positive = positive && plane.z[i] > 0.0;
    s.record("coxplane.perron_positive", positive);
  }
  if (!plane.color_b.empty()) {
    double sa = 0.0, sb = 0.0, edges = 0.0;
    for (int i : plane.color_a) sa += plane.z[i] * plane.z[i];
    for (int i : plane.color_b) sb += plane.z[i] * plane.z[i];
    for (int i : plane.color_a)
      for (int j : plane.color_b) edges += m(i, j) * plane.z[i] * plane.z[j];
    const double worst = std::max({std::abs(sa - 1.0), std::abs(sb - 1.0), std::abs(edges - plane.c)});
    s.record("coxplane.color_balance", worst <= 1e-9, dev(worst));

    const double worst_g = std::max({std::abs(plane.gamma1.norm2() - 2.0), std::abs(plane.gamma2.norm2() - 2.0),
                                     std::abs(plane.gamma1.dot(plane.gamma2) + plane.c)});
    s.record("coxplane.gamma_gram", worst_g <= 1e-9, dev(worst_g));
  }
  s.record("coxplane.coxeter_number", plane.h_spectral == h,
           "h_spectral " + std::to_string(plane.h_spectral) + ", h_count " + std::to_string(h));

  const DihedralGenerators gens = dihedral_generators(plane, rs);
  {
    const Vector& g1 = plane.gamma1;
    const Vector& g2 = plane.gamma2;
    const double worst = std::max({(gens.s1 * g1 + g1).max_abs(), (gens.s2 * g2 + g2).max_abs(),
                                   (gens.s1 * g2 - g2 - g1 * plane.c).max_abs(),
                                   (gens.s2 * g1 - g1 - g2 * plane.c).max_abs()});
    s.record("coxplane.dihedral_action", worst <= 1e-9, dev(worst));
  }
  {
    const int order = matrix_order(gens.rotation());
    s.record("coxplane.rotation_order", order == h, "order " + std::to_string(order));
  }

  s.guard("coxplane.orbits", [&] {
    const auto orbits = orbit_decomposition(rs, gens);
    bool ok = static_cast<int>(orbits.size()) == d.rank();
    for (const auto& o : orbits) ok = ok && static_cast<int>(o.members.size()) == h;
    s.record("coxplane.orbits", ok,
             std::to_string(orbits.size()) + " orbits of " + std::to_string(h));

    double spread = 0.0, gaps = 0.0;
    for (const auto& o : orbits) {
      const auto [sp, gp] = circle_quality(plane, o);
      spread = std::max(spread, sp);
      gaps = std::max(gaps, gp);
    }
    s.record("project.orbit_circles", spread < 1e-9 && gaps <= 1e-6,
             fmt("radial spread %.3g", spread) + fmt(", angular gap error %.3g", gaps));
  });

  {
    const OrthoBasis b = ortho_basis(plane);
    const double worst = std::max({std::abs(b.i_hat.norm2() - 1.0), std::abs(b.j_hat.norm2() - 1.0),
                                   std::abs(b.i_hat.dot(b.j_hat))});
    s.record("project.ortho_basis", worst <= 1e-12, dev(worst));
  }
  {
    // The rotation turns every image by the same angle of magnitude 2pi/h.
    const Matrix rot = gens.rotation();
    double worst = 0.0;
    double turn = 0.0;
    bool first = true;
    for (const auto& v : rs.roots()) {
      const PlanarPoint p = project_orthogonal(plane, v);
      const PlanarPoint q = project_orthogonal(plane, rot * v);
      if (p.radius < 1e-9) continue;
      double delta = std::remainder(angle_of(q) - angle_of(p), 2.0 * kPi);
      if (first) {
        turn = delta;
        first = false;
      }
      worst = std::max({worst, std::abs(delta - turn), std::abs(q.radius - p.radius)});
    }
    worst = std::max(worst, std::abs(std::abs(turn) - 2.0 * kPi / h));
    s.record("project.rotational_covariance", worst <= 1e-9, dev(worst));
  }
  {
    double worst = 0.0;
    for (const auto& v : rs.roots()) {
      const double l1 = v.dot(plane.gamma1) / std::sqrt(2.0);
      const double l2 = v.dot(plane.gamma2) / std::sqrt(2.0);
      const double expect = std::sqrt(std::max(0.0, l1 * l1 + l2 * l2 - plane.c * l1 * l2));
      worst = std::max(worst, std::abs(project_skew(plane, v).radius - expect));
    }
    s.record("project.skew_norm_formula", worst <= 1e-12, dev(worst));
  }
  s.guard("project.fundamental_weights", [&] {
    const auto w = fundamental_weights(rs);
    double worst = 0.0;
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        worst = std::max(worst, std::abs(rs.simples()[i].dot(w[j]) - (i == j ? 1.0 : 0.0)));
    s.record("project.fundamental_weights_dual", worst <= 1e-9, dev(worst));
    std::vector<double> norms, z;
    for (int j = 0; j < d.rank(); ++j) {
      norms.push_back(project_orthogonal(plane, w[j]).radius);
      z.push_back(plane.z[j]);
    }
    const double r = ratio_report(norms, z).max_rel_dev;
    s.record("project.weight_images_match_perron", r < 1e-9, dev(r));
  });
}

void e8_checks(Suite& s, const CoxeterDiagram& d) {
  const RootSystem rs = enumerate_roots(d);
  const CoxeterPlane plane = build_coxeter_plane(rs);
  const Folding f = fold_e8_to_h4(rs);
  const CoxeterDiagram h4 = build_diagram("H4");
  const CoxeterDiagram h4p = build_diagram("H4'");

  s.record("roots.e8_count", rs.roots().size() == 240 && plane.h == 30,
           std::to_string(rs.roots().size()) + " roots, h = " + std::to_string(plane.h));

  // Folding.
  {
    double worst = 0.0, cross = 0.0, tau_block = 0.0, sigma_block = 0.0;
    const Matrix gt = gram_matrix(h4).to_matrix();
    const Matrix gs = gram_matrix(h4p).to_matrix();
    for (int a = 0; a < 4; ++a) {
      worst = std::max({worst, std::abs(f.beta()[a].norm2() - 2.0), std::abs(f.beta_prime()[a].norm2() - 2.0)});
      for (int b = 0; b < 4; ++b) {
        cross = std::max(cross, std::abs(f.beta()[a].dot(f.beta_prime()[b])));
        tau_block = std::max(tau_block, std::abs(f.beta()[a].dot(f.beta()[b]) - gt(a, b)));
        sigma_block = std::max(sigma_block, std::abs(f.beta_prime()[a].dot(f.beta_prime()[b]) - gs(a, b)));
      }
    }
    s.record("folding.norms", worst <= 1e-12, dev(worst));
    s.record("folding.h4_gram_144", tau_block <= 1e-12, dev(tau_block));
    s.record("folding.h4_gram_72", sigma_block <= 1e-12, dev(sigma_block));
    s.record("folding.orthogonal_subspaces", cross <= 1e-12, dev(cross));
  }
  {
    const GoldenMatrix block = block_diagonalize(f);
    const GoldenMatrix upper = exact_gram(h4);
    const GoldenMatrix lower = exact_gram(h4p);
    bool ok = true;
    int zeros = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if ((i < 4) != (j < 4)) {
          zeros += block(i, j).is_zero();
          ok = ok && block(i, j).is_zero();
        } else if (i < 4) {
          ok = ok && block(i, j) == upper(i, j);
        } else {
          ok = ok && block(i, j) == lower(i - 4, j - 4);
        }
      }
    s.record("folding.exact_block_diagonal", ok,
             std::to_string(zeros) + "/32 off-block zeros; lower (3,4) = " + block(6, 7).to_string());
  }
  {
    const auto r = folded_generators(rs);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Vector& ba = f.beta()[a];
        const Vector& bb = f.beta()[b];
        const Vector expect = a == b ? -bb : bb - ba * ba.dot(bb);
        worst = std::max(worst, (r[a] * bb - expect).max_abs());
      }
    s.record("folding.generator_action", worst <= 1e-12, dev(worst));
    bool orders = true;
    std::string detail;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const auto label = h4.label(a, b);
        const int expect = label ? label->p : 2;
        const int got = matrix_order(r[a] * r[b]);
        orders = orders && got == expect;
        detail += std::to_string(got) + " ";
      }
    s.record("folding.generator_orders", orders, "orders " + detail);
  }
  {
    double worst = 0.0;
    for (const auto& v : rs.roots()) {
      const auto [vt, vs] = f.split(v);
      worst = std::max({worst, std::abs(vt.norm2() + vs.norm2() - 2.0), (vt + vs - v).max_abs()});
    }
    s.record("folding.root_split", worst <= 1e-9, dev(worst));
  }

  // Coxeter plane specifics.
  {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
      const auto [i, j] = Folding::kPairs[a];
      const double ratio = a == 3 ? plane.z[i] / plane.z[j] : plane.z[j] / plane.z[i];
      worst = std::max(worst, std::abs(ratio - kTau));
    }
    s.record("coxplane.tau_pairing", worst <= 1e-9, dev(worst));
    s.record("coxplane.c_value", std::abs(plane.c - 2.0 * std::cos(kPi / 30.0)) <= 1e-12,
             fmt("c = %.15f", plane.c));
    const double c = plane.c;
    const double t1 = std::abs(c * c - 1.0 - 2.0 * kTau * std::cos(2.0 * kPi / 15.0));
    const double t2 = std::abs(kTau * (c * c - 1.0) / c - 2.0 * kTau * std::cos(7.0 * kPi / 30.0));
    s.record("coxplane.trig_identities", std::max(t1, t2) <= 1e-12, dev(std::max(t1, t2)));
  }
  s.guard("coxplane.two_stage_route", [&] {
    // H4 Perron vector first, then lift through the folded roots.
    const CoxeterPlane hp = build_coxeter_plane(enumerate_roots(h4));
    const Vector g1 = f.beta()[0] * hp.z[0] + f.beta()[2] * hp.z[2];
    const Vector g2 = f.beta()[1] * hp.z[1] + f.beta()[3] * hp.z[3];
    const double worst = std::max((g1 - plane.gamma1).max_abs(), (g2 - plane.gamma2).max_abs());
    s.record("coxplane.two_stage_route", worst <= 1e-9, dev(worst));
  });
  {
    const DihedralGenerators gens = dihedral_generators(plane, rs);
    const auto cyc = orbit_decomposition(rs, gens);
    const auto dih = dihedral_orbits(rs, gens);
    bool ok = dih.size() == 8;
    for (const auto& o : dih) ok = ok && o.size() == 30;
    for (const auto& o : cyc) ok = ok && o.label_sign == 1;
    s.record("coxplane.d30_orbits", ok, std::to_string(dih.size()) + " dihedral orbits");
  }

  // Projections.
  const auto ortho = project_all(plane, rs.roots(), ProjectionMode::Orthogonal);
  const CircleSpectrum ocs = circle_spectrum(ortho, ProjectionMode::Orthogonal);
  {
    bool ok = ocs.circles.size() == 8;
    for (const auto& c : ocs.circles) ok = ok && c.count() == 30;
    s.record("project.gosset_circles", ok, std::to_string(ocs.circles.size()) + " circles");
  }
  const auto skew = skew_simple_radii(plane, rs);
  const auto orth = ortho_simple_radii(plane, rs);
  {
    // alpha_7/alpha_1, alpha_6/alpha_2, alpha_4/alpha_8, alpha_5/alpha_3
    const int ladder[4][2] = {{6, 0}, {5, 1}, {3, 7}, {4, 2}};
    double worst = 0.0;
    for (const auto& r : {skew, orth})
      for (const auto& p : ladder) worst = std::max(worst, std::abs(r[p[0]] / r[p[1]] - kTau));
    s.record("project.tau_ladder", worst <= 1e-9, dev(worst));
  }
  {
    auto sorted = skew;
    std::sort(sorted.begin(), sorted.end());
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(sorted[k] - kReferenceSkewRadii[k]));
    s.record("project.skew_reference_radii", worst <= 5e-4, dev(worst));
    const double e1 = std::abs(sorted[2] / (2.0 * sorted[0] * std::cos(kPi / 30.0)) - 1.0);
    const double e2 = std::abs(sorted[3] / (2.0 * sorted[1] * std::cos(7.0 * kPi / 30.0)) - 1.0);
    const double e3 = std::abs(sorted[4] / (2.0 * sorted[1] * std::cos(2.0 * kPi / 15.0)) - 1.0);
    const double e = std::max({e1, e2, e3});
    s.record("masses.skew_mass_identities", e <= 1e-9, dev(e));
  }
  {
    const DihedralGenerators gens = dihedral_generators(plane, rs);
    int spread_orbits = 0;
    for (const auto& o : orbit_decomposition(rs, gens)) {
      std::vector<PlanarPoint> pts;
      for (const auto& v : o.members) pts.push_back(project_skew(plane, v));
      if (circle_spectrum(pts, ProjectionMode::Skew).circles.size() >= 2) ++spread_orbits;
    }
    s.record("project.skew_orbits_spread", spread_orbits >= 1,
             std::to_string(spread_orbits) + " orbits span several radii");
    const auto all = project_all(plane, rs.roots(), ProjectionMode::Skew);
    s.record("project.skew_circle_count", true,
             "informational: " + std::to_string(circle_spectrum(all, ProjectionMode::Skew).circles.size()) +
                 " distinct skew radii over 240 roots");
  }

  // Masses.
  const MassSpectrum zam = zamolodchikov_spectrum(1.0);
  const std::vector<double> zam_v(zam.masses.begin(), zam.masses.end());
  {
    const auto& m = zam.masses;  // ascending m1..m8
    const double w = std::max({std::abs(m[1] / m[0] - kTau), std::abs(m[5] / m[2] - kTau),
                               std::abs(m[6] / m[3] - kTau), std::abs(m[7] / m[4] - kTau)});
    s.record("masses.tau_relations", w <= 1e-12, dev(w));
    const MassSpectrum scaled = zamolodchikov_spectrum(3.7);
    double e = 0.0;
    for (int k = 0; k < 8; ++k) e = std::max(e, std::abs(scaled.masses[k] - 3.7 * m[k]) / scaled.masses[k]);
    s.record("masses.scale_equivariance", e <= 1e-15, dev(e));
  }
  {
    std::vector<double> z(plane.z.coords().begin(), plane.z.coords().end());
    const double r = ratio_report(z, zam_v).max_rel_dev;
    s.record("masses.perron_proportional", r < 1e-9, dev(r));
  }
  s.guard("masses.toda", [&] {
    const TodaMassMatrix t = toda_mass_matrix(rs);
    const auto toda = toda_masses(t);
    const double r1 = ratio_report(toda, zam_v).max_rel_dev;
    s.record("masses.toda_route", r1 < 1e-9, dev(r1));
    const double r2 = ratio_report(ocs.radii(), zam_v).max_rel_dev;
    s.record("masses.gosset_route", r2 < 1e-9, dev(r2));
    const double r3 = ratio_report(toda, ocs.radii()).max_rel_dev;
    s.record("masses.toda_vs_gosset", r3 < 1e-9, dev(r3));
    const double r4 = ratio_report(skew, orth).max_rel_dev;
    s.record("masses.skew_vs_ortho", r4 < 1e-9, dev(r4));

    const double tr = t.m.trace();
    s.record("masses.toda_trace", std::abs(tr - 60.0) <= 1e-9, fmt("trace %.12f", tr));

    const auto em = jacobi_eigen(t.m).values;
    const auto en = jacobi_eigen(t.n).values;
    int zeros = 0;
    for (double x : en) zeros += std::abs(x) < 1e-9;
    double match = 0.0;
    for (int k = 0; k < 8; ++k) match = std::max(match, std::abs(en[k + 1] - em[k]));
    s.record("masses.n_singular", zeros == 1 && match <= 1e-9 && em.front() > 0.0,
             std::to_string(zeros) + " null eigenvalue(s), " + dev(match));

    // Same masses from a rotated realization of the simple roots.
    const Matrix q = random_orthogonal(8, 20100117u);
    std::vector<Vector> rotated;
    for (const auto& a : rs.simples()) rotated.push_back(q * a);
    const auto em2 = jacobi_eigen(toda_mass_matrix(enumerate_roots(d, rotated)).m).values;
    double cov = 0.0;
    for (int k = 0; k < 8; ++k) cov = std::max(cov, std::abs(em2[k] - em[k]));
    s.record("masses.basis_covariance", cov <= 1e-9, dev(cov));

    std::vector<double> weights;
    for (const auto& w : fundamental_weights(rs)) weights.push_back(project_orthogonal(plane, w).radius);
    const double r5 = ratio_report(weights, zam_v).max_rel_dev;
    s.record("masses.weight_route", r5 < 1e-9, dev(r5));
  });
}

void h4_checks(Suite& s, const CoxeterDiagram& d) {
  const RootSystem rs = enumerate_roots(d);
  const CoxeterPlane plane = build_coxeter_plane(rs);
  {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(plane.z[k] - kReferenceH4Perron[k]));
    s.record("coxplane.h4_reference_perron", worst <= 5e-4, dev(worst));
    const double c = plane.c;
    const Vector& z = plane.z;
    const double e = std::max({std::abs(z[1] - c * z[0]), std::abs(z[2] - (c * c - 1.0) * z[0]),
                               std::abs(z[3] - kTau * (c * c - 1.0) / c * z[0])});
    s.record("coxplane.h4_component_ratios", e <= 1e-9, dev(e));
  }
  const auto pts = project_all(plane, rs.roots(), ProjectionMode::Orthogonal);
  const CircleSpectrum cs = circle_spectrum(pts, ProjectionMode::Orthogonal);
  bool ok = cs.circles.size() == 4 && rs.roots().size() == 120;
  for (const auto& c : cs.circles) ok = ok && c.count() == 30;
  const auto m = zamolodchikov_spectrum(1.0).masses;
  const std::vector<double> target{m[0], m[2], m[3], m[4]};
  double r = 1.0;
  if (cs.circles.size() == 4) r = ratio_report(cs.radii(), target).max_rel_dev;
  s.record("project.h4_600cell_circles", ok && r < 1e-9,
           std::to_string(cs.circles.size()) + " circles, " + dev(r));
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const CoxeterDiagram& d) {
  Suite s;
  s.guard("suite", [&] {
    generic_checks(s, d);
    if (d.rank() == 8 && d.edges() == build_diagram("E8").edges()) e8_checks(s, d);
    if (d.rank() == 4 && d.edges() == build_diagram("H4").edges()) h4_checks(s, d);
  });
  return s.take();
}

}  // namespace gosset
