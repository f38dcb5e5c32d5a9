// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_ROOTS_HPP
#define GOSSET_ROOTS_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gosset/diagrams.hpp"
#include "gosset/linalg.hpp"

namespace gosset {

inline constexpr double kDedupTol = 1e-6;
inline constexpr std::size_t kClosureCap = 1'000'000;

/// Rows of the lower Cholesky factor of the Gram matrix: alpha_i has zeros
/// beyond coordinate i. Throws NotFiniteType for an indefinite Gram matrix.
std::vector<Vector> realize_simple_roots(const CoxeterDiagram& d);

/// v - 2 (v.root)/(root.root) root. Throws InvalidArgument for a zero root.
Vector reflect(const Vector& root, const Vector& v);

/// Orthogonal matrix of the reflection in the hyperplane normal to `root`.
Matrix reflection_matrix(const Vector& root);

/// Hash set of vectors with max-norm tolerance. Coordinates are bucketed on a
/// grid 100 times coarser than the tolerance; a coordinate within tolerance of
/// a bucket boundary also probes the adjacent bucket.
class VectorIndex {
 public:
  explicit VectorIndex(double tol = kDedupTol) : tol_(tol) {}

  /// Index of a stored vector within tolerance of v, if any.
  std::optional<std::size_t> find(const Vector& v) const;
  /// Inserts v unless an equivalent vector is present; returns its index and
  /// whether it was new.
  std::pair<std::size_t, bool> insert(const Vector& v);
  const std::vector<Vector>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  static constexpr double kBucketsPerTol = 100.0;
  static constexpr std::size_t kMaxProbedCoords = 12;

  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& k) const;
  };
  std::vector<std::vector<long long>> candidate_keys(const Vector& v) const;

  double tol_;
  std::vector<Vector> items_;
  std::unordered_map<std::vector<long long>, std::vector<std::size_t>, KeyHash> buckets_;
};

class RootSystem {
 public:
  RootSystem(CoxeterDiagram diagram, std::vector<Vector> simples, std::vector<Vector> roots);

  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  const std::vector<Vector>& simples() const { return simples_; }
  /// Lexicographically sorted.
  const std::vector<Vector>& roots() const { return roots_; }
  int coxeter_number() const { return coxeter_number_; }
  const std::vector<Matrix>& generators() const { return generators_; }

  /// Index of v in roots(), if it is a root.
  std::optional<std::size_t> find(const Vector& v) const { return index_.find(v); }
  /// Coefficients of v in the simple-root basis.
  Vector expand(const Vector& v) const;
  /// Simple-root inner products, i.e. the Gram matrix realized by simples().
  Matrix gram() const { return gram_; }

 private:
  CoxeterDiagram diagram_;
  std::vector<Vector> simples_;
  std::vector<Vector> roots_;
  std::vector<Matrix> generators_;
  Matrix gram_;
  VectorIndex index_;
  int coxeter_number_ = 0;
};

/// Closure of the simple roots under all simple reflections (breadth-first,
/// deduplicated at 1e-6 in max norm). Throws NotFiniteType past kClosureCap
/// vectors or when |roots| is not a multiple of the rank.
RootSystem enumerate_roots(const CoxeterDiagram& d, const std::vector<Vector>& simples);
RootSystem enumerate_roots(const CoxeterDiagram& d);

struct HighestRoot {
  Vector theta;
  std::vector<int> marks;  // theta = sum marks[i] * alpha_i
};

/// Root with the largest coefficient sum. Simply-laced diagrams only; throws
/// NotCrystallographic otherwise.
HighestRoot highest_root(const RootSystem& rs);

}  // namespace gosset

#endif  // GOSSET_ROOTS_HPP
