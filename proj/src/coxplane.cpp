// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/coxplane.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "gosset/error.hpp"

namespace gosset {

namespace {

bool irreducible(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop_front();
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && m(u, v) != 0.0) {
        seen[v] = true;
        ++count;
        todo.push_back(v);
      }
  }
  return count == n;
}

}  // namespace

PerronPair perron_eigenvector(const Matrix& m, std::span<const int> color_a, int max_iterations) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(ErrorCode::InvalidArgument, "Perron: matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j) < 0.0)
        throw Error(ErrorCode::InvalidArgument, "Perron: negative off-diagonal entry");
  if (!irreducible(m)) throw Error(ErrorCode::Disconnected, "Perron: diagram is disconnected");

  // Shifting by 2 makes the iteration matrix nonnegative with a positive
  // diagonal, hence primitive.
  const Matrix b = m + 2.0 * Matrix::identity(n);
  Vector x(n, 1.0);
  PerronPair out;
  for (int it = 1;; ++it) {
    if (it > max_iterations) throw Error(ErrorCode::NoConvergence, "Perron: power iteration cap reached");
    const Vector y = b * x;
    double lo = y[0] / x[0], hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const double q = y[i] / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    x = y / y.max_abs();
    if (hi - lo < 1e-12) {
      out.iterations = it;
      break;
    }
  }
  out.c = x.dot(m * x) / x.norm2();

  double s = 0.0;
  for (int i : color_a) s += x[i] * x[i];
  out.z = s > 0.0 ? x / std::sqrt(s) : x / x.norm();
  return out;
}

CoxeterPlane build_coxeter_plane(const RootSystem& rs) {
  const int n = rs.rank();
  for (const auto& e : rs.diagram().edges())
    if (!e.m.is_integer())
      throw Error(ErrorCode::WrongType, "Coxeter plane needs integer edge labels, got " + to_string(e.m));
  const Bipartition parts = bipartition(rs.diagram());
  const Matrix m = 2.0 * Matrix::identity(n) - gram_matrix(rs.diagram()).to_matrix();
  const PerronPair pp = perron_eigenvector(m, parts.color_a);

  CoxeterPlane plane;
  plane.c = pp.c;
  plane.z = pp.z;
  plane.color_a = parts.color_a;
  plane.color_b = parts.color_b;
  plane.gamma1 = Vector(rs.simples().front().dim());
  plane.gamma2 = Vector(rs.simples().front().dim());
  for (int i : parts.color_a) plane.gamma1 += rs.simples()[i] * pp.z[i];
  for (int i : parts.color_b) plane.gamma2 += rs.simples()[i] * pp.z[i];
  plane.h = rs.coxeter_number();
  plane.h_spectral = static_cast<int>(std::lround(std::numbers::pi / std::acos(std::clamp(pp.c / 2.0, -1.0, 1.0))));
  return plane;
}

DihedralGenerators dihedral_generators(const CoxeterPlane& plane, const RootSystem& rs) {
  const std::size_t dim = rs.simples().front().dim();
  DihedralGenerators g{Matrix::identity(dim), Matrix::identity(dim)};
  for (int i : plane.color_a) g.s1 = g.s1 * rs.generators()[i];
  for (int i : plane.color_b) g.s2 = g.s2 * rs.generators()[i];
  return g;
}

int matrix_order(const Matrix& m, int cap, double tol) {
  const Matrix id = Matrix::identity(m.rows());
  Matrix p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p.max_abs_diff(id) <= tol) return k;
    p = p * m;
  }
  return 0;
}

namespace {

std::size_t root_index(const RootSystem& rs, const Vector& v) {
  auto idx = rs.find(v);
  if (!idx) throw Error(ErrorCode::Internal, "group element maps a root outside the root set");
  return *idx;
}

}  // namespace

std::vector<Orbit> orbit_decomposition(const RootSystem& rs, const DihedralGenerators& gens) {
  const Matrix rot = gens.rotation();
  const std::size_t total = rs.roots().size();
  std::vector<int> orbit_of(total, -1);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < total; ++start) {
    if (orbit_of[start] != -1) continue;
    std::vector<std::size_t> cycle;
    std::size_t cur = start;
    do {
      orbit_of[cur] = static_cast<int>(cycles.size());
      cycle.push_back(cur);
      cur = root_index(rs, rot * rs.roots()[cur]);
    } while (cur != start && cycle.size() <= total);
    if (cur != start) throw Error(ErrorCode::Internal, "rotation does not permute the roots");
    cycles.push_back(std::move(cycle));
  }

  const Bipartition parts = bipartition(rs.diagram());
  std::vector<int> transversal_sign(rs.rank(), 1);
  for (int j : parts.color_b) transversal_sign[j] = -1;

  std::vector<int> label_of(cycles.size(), -1);
  for (int i = 0; i < rs.rank(); ++i) {
    const std::size_t idx = root_index(rs, rs.simples()[i] * transversal_sign[i]);
    int& label = label_of[orbit_of[idx]];
    if (label != -1)
      throw Error(ErrorCode::Internal, "orbit holds two simple transversal roots");
    label = i;
  }

  std::vector<Orbit> out(rs.rank());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (label_of[k] == -1) throw Error(ErrorCode::Internal, "orbit holds no simple transversal root");
    Orbit& o = out[label_of[k]];
    o.label = label_of[k];
    const std::size_t simple_idx = root_index(rs, rs.simples()[o.label]);
    o.label_sign = orbit_of[simple_idx] == static_cast<int>(k) ? 1 : -1;
    // Start the rotation order at the labeling root.
    const std::size_t anchor = o.label_sign == 1 ? simple_idx : root_index(rs, -rs.simples()[o.label]);
    auto& cyc = cycles[k];
    std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), anchor), cyc.end());
    o.root_indices = cyc;
    for (std::size_t idx : cyc) o.members.push_back(rs.roots()[idx]);
  }
  if (cycles.size() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::Internal, "orbit count differs from the rank");
  return out;
}

std::vector<std::vector<std::size_t>> dihedral_orbits(const RootSystem& rs, const DihedralGenerators& gens) {
  const std::size_t total = rs.roots().size();
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Vector& v = rs.roots()[orbit[k]];
      for (const Matrix* s : {&gens.s1, &gens.s2}) {
        const std::size_t idx = root_index(rs, *s * v);
        if (!seen[idx]) {
          seen[idx] = true;
          orbit.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace gosset
