// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/folding.hpp"

#include <cmath>

#include "gosset/error.hpp"

namespace gosset {

Matrix GoldenMatrix::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).to_double();
  return m;
}

GoldenMatrix exact_gram(const CoxeterDiagram& d) {
  const GramMatrix g = gram_matrix(d);
  GoldenMatrix out(d.rank());
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) {
      const auto& cell = g.entry(i, j);
      if (!cell.exact) throw Error(ErrorCode::InvalidArgument, "Gram entry is not in the golden field");
      out(i, j) = *cell.exact;
    }
  return out;
}

namespace {

void require_e8(const RootSystem& rs) {
  static const CoxeterDiagram e8 = build_diagram("E8");
  if (rs.rank() != 8 || rs.diagram().edges() != e8.edges())
    throw Error(ErrorCode::WrongType, "folding needs E8 with the folding node labeling");
}

GoldenScalar unit(Normalizer n) {
  return n == Normalizer::Tau ? GoldenScalar::tau() : GoldenScalar::sigma();
}

FoldedRow make_row(int a, Normalizer n) {
  FoldedRow row;
  row.normalizer = n;
  row.numerator.fill(GoldenScalar(0));
  const auto [i, j] = Folding::kPairs[a];
  // beta_4 carries the unit on alpha_4 rather than on its partner alpha_8.
  if (a == 3) {
    row.numerator[i] = unit(n);
    row.numerator[j] = 1;
  } else {
    row.numerator[i] = 1;
    row.numerator[j] = unit(n);
  }
  return row;
}

Matrix inverse_gram(const std::array<Vector, 4>& vs) {
  Matrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = vs[i].dot(vs[j]);
  return inverse(g);
}

Vector project_onto(const std::array<Vector, 4>& basis, const Matrix& gram_inv, const Vector& v) {
  Vector coeff(4);
  for (int i = 0; i < 4; ++i) coeff[i] = basis[i].dot(v);
  coeff = gram_inv * coeff;
  Vector out(v.dim());
  for (int i = 0; i < 4; ++i) out += basis[i] * coeff[i];
  return out;
}

}  // namespace

Folding::Folding(const RootSystem& e8) : cartan_(8), g_(8, 8) {
  require_e8(e8);
  cartan_ = exact_gram(e8.diagram());
  for (int a = 0; a < 4; ++a) {
    rows_[a] = make_row(a, Normalizer::Tau);
    rows_[a + 4] = make_row(a, Normalizer::Sigma);
  }
  for (int r = 0; r < 8; ++r) {
    const double scale = 1.0 / std::sqrt(2.0 + unit(rows_[r].normalizer).to_double());
    Vector v(8);
    for (int i = 0; i < 8; ++i) {
      g_(r, i) = rows_[r].numerator[i].to_double() * scale;
      v += e8.simples()[i] * g_(r, i);
    }
    (r < 4 ? beta_[r] : beta_prime_[r - 4]) = v;
  }
  beta_gram_inv_ = inverse_gram(beta_);
  beta_prime_gram_inv_ = inverse_gram(beta_prime_);
}

std::pair<Vector, Vector> Folding::split(const Vector& v) const {
  return {project_onto(beta_, beta_gram_inv_, v), project_onto(beta_prime_, beta_prime_gram_inv_, v)};
}

Folding fold_e8_to_h4(const RootSystem& rs) { return Folding(rs); }

std::array<Matrix, 4> folded_generators(const RootSystem& rs) {
  require_e8(rs);
  std::array<Matrix, 4> out;
  for (int a = 0; a < 4; ++a) {
    const auto [i, j] = Folding::kPairs[a];
    out[a] = rs.generators()[i] * rs.generators()[j];
  }
  return out;
}

GoldenMatrix block_diagonalize(const Folding& f) {
  const GoldenMatrix& c = f.cartan();
  const GoldenScalar tau = GoldenScalar::tau();
  const GoldenScalar sigma = GoldenScalar::sigma();
  // 1 / (sqrt(2+s) sqrt(2+t)); (2+tau)(2+sigma) = 5.
  auto factor = [&](Normalizer s, Normalizer t) {
    if (s != t) return GoldenScalar::sqrt5() / 5;
    return GoldenScalar(1) / (2 + (s == Normalizer::Tau ? tau : sigma));
  };
  GoldenMatrix out(8);
  for (int r = 0; r < 8; ++r)
    for (int s = 0; s < 8; ++s) {
      GoldenScalar acc(0);
      for (int i = 0; i < 8; ++i) {
        if (f.rows()[r].numerator[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j)
          acc += f.rows()[r].numerator[i] * c(i, j) * f.rows()[s].numerator[j];
      }
      out(r, s) = acc * factor(f.rows()[r].normalizer, f.rows()[s].normalizer);
    }
  return out;
}

}  // namespace gosset
