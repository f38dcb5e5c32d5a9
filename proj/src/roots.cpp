// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "gosset/error.hpp"

namespace gosset {

std::vector<Vector> realize_simple_roots(const CoxeterDiagram& d) {
  const Matrix l = cholesky_lower(gram_matrix(d).to_matrix());
  std::vector<Vector> out;
  out.reserve(d.rank());
  for (int i = 0; i < d.rank(); ++i) out.push_back(l.row(i));
  return out;
}

Vector reflect(const Vector& root, const Vector& v) {
  const double rr = root.norm2();
  if (rr == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot reflect in a zero root");
  return v - root * (2.0 * v.dot(root) / rr);
}

Matrix reflection_matrix(const Vector& root) {
  const double rr = root.norm2();
  if (rr == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot reflect in a zero root");
  const std::size_t n = root.dim();
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= 2.0 * root[i] * root[j] / rr;
  return m;
}

std::size_t VectorIndex::KeyHash::operator()(const std::vector<long long>& k) const {
  std::size_t h = 1469598103934665603ull;
  for (long long x : k) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::vector<long long>> VectorIndex::candidate_keys(const Vector& v) const {
  const double width = kBucketsPerTol * tol_;
  const double margin = 0.5 - 1.0 / kBucketsPerTol;
  std::vector<long long> base(v.dim());
  std::vector<std::size_t> ambiguous;
  std::vector<long long> alternate(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double scaled = v[i] / width;
    base[i] = std::llround(scaled);
    const double frac = scaled - static_cast<double>(base[i]);
    if (std::abs(frac) >= margin) {
      ambiguous.push_back(i);
      alternate[i] = base[i] + (frac > 0 ? 1 : -1);
    }
  }
  if (ambiguous.size() > kMaxProbedCoords)
    throw Error(ErrorCode::Internal, "too many coordinates on bucket boundaries");
  std::vector<std::vector<long long>> keys;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ambiguous.size()); ++mask) {
    auto key = base;
    for (std::size_t b = 0; b < ambiguous.size(); ++b)
      if (mask & (std::size_t{1} << b)) key[ambiguous[b]] = alternate[ambiguous[b]];
    keys.push_back(std::move(key));
  }
  return keys;
}

std::optional<std::size_t> VectorIndex::find(const Vector& v) const {
  for (const auto& key : candidate_keys(v)) {
    auto it = buckets_.find(key);
    if (it == buckets_.end()) continue;
    for (std::size_t idx : it->second)
      if (distance_max(items_[idx], v) <= tol_) return idx;
  }
  return std::nullopt;
}

std::pair<std::size_t, bool> VectorIndex::insert(const Vector& v) {
  if (auto idx = find(v)) return {*idx, false};
  const std::size_t idx = items_.size();
  items_.push_back(v);
  buckets_[candidate_keys(v).front()].push_back(idx);
  return {idx, true};
}

namespace {

bool lex_less(const Vector& x, const Vector& y) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (std::abs(x[i] - y[i]) <= 1e-9) continue;
    return x[i] < y[i];
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(CoxeterDiagram diagram, std::vector<Vector> simples, std::vector<Vector> roots)
    : diagram_(std::move(diagram)), simples_(std::move(simples)), roots_(std::move(roots)) {
  if (static_cast<int>(simples_.size()) != diagram_.rank())
    throw Error(ErrorCode::InvalidArgument, "simple root count differs from the diagram rank");
  std::stable_sort(roots_.begin(), roots_.end(), lex_less);
  for (const auto& r : roots_) index_.insert(r);
  for (const auto& s : simples_) generators_.push_back(reflection_matrix(s));
  const std::size_t n = simples_.size();
  gram_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_(i, j) = simples_[i].dot(simples_[j]);
  if (roots_.size() % n == 0) coxeter_number_ = static_cast<int>(roots_.size() / n);
}

Vector RootSystem::expand(const Vector& v) const {
  Vector rhs(simples_.size());
  for (std::size_t i = 0; i < simples_.size(); ++i) rhs[i] = simples_[i].dot(v);
  return solve(gram_, rhs);
}

RootSystem enumerate_roots(const CoxeterDiagram& d, const std::vector<Vector>& simples) {
  if (static_cast<int>(simples.size()) != d.rank())
    throw Error(ErrorCode::InvalidArgument, "simple root count differs from the diagram rank");
  VectorIndex seen;
  std::deque<std::size_t> frontier;
  for (const auto& s : simples) {
    auto [idx, fresh] = seen.insert(s);
    if (fresh) frontier.push_back(idx);
  }
  while (!frontier.empty()) {
    const Vector v = seen.items()[frontier.front()];
    frontier.pop_front();
    for (const auto& s : simples) {
      auto [idx, fresh] = seen.insert(reflect(s, v));
      if (!fresh) continue;
      if (seen.size() > kClosureCap)
        throw Error(ErrorCode::NotFiniteType, "reflection closure exceeds the safety cap");
      frontier.push_back(idx);
    }
  }
  return RootSystem(d, simples, seen.items());
}

RootSystem enumerate_roots(const CoxeterDiagram& d) { return enumerate_roots(d, realize_simple_roots(d)); }

HighestRoot highest_root(const RootSystem& rs) {
  if (!rs.diagram().crystallographic())
    throw Error(ErrorCode::NotCrystallographic, "highest root needs a simply-laced diagram");
  if (!rs.diagram().connected())
    throw Error(ErrorCode::Disconnected, "highest root needs a connected diagram");
  HighestRoot best;
  long long best_sum = 0;
  bool found = false;
  for (const auto& v : rs.roots()) {
    const Vector coeff = rs.expand(v);
    std::vector<int> marks(coeff.dim());
    long long sum = 0;
    for (std::size_t i = 0; i < coeff.dim(); ++i) {
      const double r = std::round(coeff[i]);
      if (std::abs(coeff[i] - r) > 1e-9)
        throw Error(ErrorCode::Internal, "root has a non-integral simple-root expansion");
      marks[i] = static_cast<int>(r);
      sum += marks[i];
    }
    if (!found || sum > best_sum) {
      best = {v, marks};
      best_sum = sum;
      found = true;
    }
  }
  for (int m : best.marks)
    if (m <= 0) throw Error(ErrorCode::Internal, "highest root has a non-positive mark");
  return best;
}

}  // namespace gosset
