// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GOSSET_FOLDING_HPP
#define GOSSET_FOLDING_HPP

#include <array>
#include <utility>
#include <vector>

#include "gosset/linalg.hpp"
#include "gosset/roots.hpp"
#include "gosset/scalars.hpp"

namespace gosset {

/// Square matrix over the golden field.
class GoldenMatrix {
 public:
  explicit GoldenMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  GoldenScalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GoldenScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Matrix to_matrix() const;

  friend bool operator==(const GoldenMatrix&, const GoldenMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<GoldenScalar> a_;
};

/// Exact Gram matrix of a diagram; throws InvalidArgument if any label is
/// outside the golden field.
GoldenMatrix exact_gram(const CoxeterDiagram& d);

/// Which golden unit scales a row of the change of basis.
enum class Normalizer { Tau, Sigma };

/// One row of g: beta = numerator . alpha / sqrt(2 + unit).
struct FoldedRow {
  std::array<GoldenScalar, 8> numerator;
  Normalizer normalizer = Normalizer::Tau;
};

/// The H4 subsystem of E8: beta_a (144-degree block, tau) and beta'_a
/// (72-degree block, sigma) written in E8 simple roots.
class Folding {
 public:
  /// E8 nodes (0-based) paired by each H4 generator R_a = r_i r_j.
  static constexpr std::array<std::pair<int, int>, 4> kPairs{{{0, 6}, {1, 5}, {2, 4}, {3, 7}}};

  explicit Folding(const RootSystem& e8);

  /// Rows 0..3 are beta_1..beta_4, rows 4..7 are beta'_1..beta'_4.
  const std::array<FoldedRow, 8>& rows() const { return rows_; }
  const std::array<Vector, 4>& beta() const { return beta_; }
  const std::array<Vector, 4>& beta_prime() const { return beta_prime_; }
  /// g in floating point: row i holds the alpha-coefficients of row i.
  const Matrix& g() const { return g_; }
  /// Exact E8 Cartan matrix the rows are taken against.
  const GoldenMatrix& cartan() const { return cartan_; }

  /// Unique v = v_tau + v_sigma with v_tau in span(beta), v_sigma in span(beta').
  std::pair<Vector, Vector> split(const Vector& v) const;

 private:
  GoldenMatrix cartan_;
  std::array<FoldedRow, 8> rows_;
  std::array<Vector, 4> beta_;
  std::array<Vector, 4> beta_prime_;
  Matrix g_;
  Matrix beta_gram_inv_;
  Matrix beta_prime_gram_inv_;
};

/// Throws WrongType unless rs is E8 with the folding labeling.
Folding fold_e8_to_h4(const RootSystem& rs);

/// R_a = r_i r_j for the four node pairs, as orthogonal 8x8 matrices.
std::array<Matrix, 4> folded_generators(const RootSystem& rs);

/// Exact g C g^T: the Gram matrix of (beta_1..beta_4, beta'_1..beta'_4).
/// Normalizer products are resolved in the field: 1/(2+tau), 1/(2+sigma), and
/// 1/sqrt5 = sqrt5/5 for mixed entries.
GoldenMatrix block_diagonalize(const Folding& f);

}  // namespace gosset

#endif  // GOSSET_FOLDING_HPP
