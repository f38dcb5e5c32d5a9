// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/masses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gosset/error.hpp"

namespace gosset {

MassSpectrum zamolodchikov_spectrum(double m1) {
  if (!(m1 > 0.0) || !std::isfinite(m1)) throw Error(ErrorCode::InvalidArgument, "m1 must be positive");
  constexpr double pi = std::numbers::pi;
  const double tau = std::numbers::phi;
  const double m2 = tau * m1;
  const double m3 = 2.0 * m1 * std::cos(pi / 30.0);
  const double m4 = 2.0 * m2 * std::cos(7.0 * pi / 30.0);
  const double m5 = 2.0 * m2 * std::cos(2.0 * pi / 15.0);
  MassSpectrum s;
  s.m1 = m1;
  s.masses = {m1, m2, m3, m4, m5, tau * m3, tau * m4, tau * m5};
  std::sort(s.masses.begin(), s.masses.end());
  return s;
}

TodaMassMatrix toda_mass_matrix(const RootSystem& rs) {
  static const CoxeterDiagram e8 = build_diagram("E8");
  if (rs.rank() != 8 || rs.diagram().edges() != e8.edges())
    throw Error(ErrorCode::WrongType, "the Toda mass matrix is built for E8");
  const HighestRoot top = highest_root(rs);

  TodaMassMatrix t;
  t.marks.push_back(1);
  t.marks.insert(t.marks.end(), top.marks.begin(), top.marks.end());
  t.affine_roots.push_back(-top.theta);
  t.affine_roots.insert(t.affine_roots.end(), rs.simples().begin(), rs.simples().end());

  const std::size_t dim = rs.simples().front().dim();
  t.m = Matrix(dim, dim);
  for (std::size_t i = 0; i < t.affine_roots.size(); ++i) {
    const Vector& a = t.affine_roots[i];
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) t.m(p, q) += t.marks[i] * a[p] * a[q];
  }
  const std::size_t k = t.affine_roots.size();
  t.n = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      t.n(i, j) = std::sqrt(static_cast<double>(t.marks[i]) * t.marks[j]) *
                  t.affine_roots[i].dot(t.affine_roots[j]);
  return t;
}

std::vector<double> toda_masses(const TodaMassMatrix& t) {
  std::vector<double> out;
  for (double ev : jacobi_eigen(t.m).values) out.push_back(std::sqrt(std::max(0.0, ev)));
  return out;
}

namespace {

std::vector<std::size_t> sorted_order(std::span<const double> xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  return idx;
}

}  // namespace

RatioReport ratio_report(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "ratio report: length mismatch");
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "ratio report: empty lists");
  for (double x : a)
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "ratio report: entries must be positive");
  for (double x : b)
    if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "ratio report: entries must be positive");

  RatioReport r;
  r.pairing_a = sorted_order(a);
  r.pairing_b = sorted_order(b);
  const double a0 = a[r.pairing_a.front()];
  const double b0 = b[r.pairing_b.front()];
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double ra = a[r.pairing_a[k]] / a0;
    const double rb = b[r.pairing_b[k]] / b0;
    r.ratios_a.push_back(ra);
    r.ratios_b.push_back(rb);
    r.max_rel_dev = std::max(r.max_rel_dev, std::abs(ra - rb) / std::max(ra, rb));
  }
  return r;
}

}  // namespace gosset
