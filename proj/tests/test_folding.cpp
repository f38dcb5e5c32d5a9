#include <doctest.h>

#include <Eigen/Dense>

#include "gosset/coxplane.hpp"
#include "gosset/error.hpp"
#include "gosset/folding.hpp"

using namespace gosset;

namespace {

const RootSystem& e8() {
  static const RootSystem rs = enumerate_roots(build_diagram("E8"));
  return rs;
}

}  // namespace

TEST_SUITE("folding") {

TEST_CASE("exact block diagonal form") {
  const GoldenMatrix block = block_diagonalize(fold_e8_to_h4(e8()));
  const GoldenMatrix upper = exact_gram(build_diagram("H4"));
  const GoldenMatrix lower = exact_gram(build_diagram("H4'"));
  int zeros = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if ((i < 4) != (j < 4)) {
        CHECK(block(i, j).is_zero());
        zeros += block(i, j).is_zero();
      } else if (i < 4) {
        CHECK(block(i, j) == upper(i, j));
      } else {
        CHECK(block(i, j) == lower(i - 4, j - 4));
      }
    }
  CHECK(zeros == 32);
  CHECK(block(2, 3) == -GoldenScalar::tau());
  CHECK(block(6, 7) == -GoldenScalar::sigma());
  CHECK(block(0, 1) == GoldenScalar(-1));
  CHECK(block(4, 5) == GoldenScalar(-1));
}

TEST_CASE("floating g C g^T agrees with Eigen") {
  const Folding f = fold_e8_to_h4(e8());
  Eigen::MatrixXd g(8, 8), c(8, 8);
  const Matrix cf = exact_gram(build_diagram("E8")).to_matrix();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      g(i, j) = f.g()(i, j);
      c(i, j) = cf(i, j);
    }
  const Eigen::MatrixXd b = g * c * g.transpose();
  const Matrix upper = exact_gram(build_diagram("H4")).to_matrix();
  const Matrix lower = exact_gram(build_diagram("H4'")).to_matrix();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      double want = 0.0;
      if (i < 4 && j < 4) want = upper(i, j);
      if (i >= 4 && j >= 4) want = lower(i - 4, j - 4);
      CHECK(std::abs(b(i, j) - want) < 1e-12);
    }
}

TEST_CASE("folded vectors") {
  const Folding f = fold_e8_to_h4(e8());
  for (int a = 0; a < 4; ++a) {
    CHECK(f.beta()[a].norm2() == doctest::Approx(2.0));
    CHECK(f.beta_prime()[a].norm2() == doctest::Approx(2.0));
    for (int b = 0; b < 4; ++b) CHECK(std::abs(f.beta()[a].dot(f.beta_prime()[b])) < 1e-12);
  }
  // beta_4 carries tau on alpha_4 and 1 on alpha_8
  const auto& row = f.rows()[3].numerator;
  CHECK(row[3] == GoldenScalar::tau());
  CHECK(row[7] == GoldenScalar(1));
  CHECK(f.rows()[3].normalizer == Normalizer::Tau);
  CHECK(f.rows()[7].normalizer == Normalizer::Sigma);
}

TEST_CASE("every root splits into the two H4 copies") {
  const Folding f = fold_e8_to_h4(e8());
  for (const auto& v : e8().roots()) {
    const auto [vt, vs] = f.split(v);
    CHECK((vt + vs - v).max_abs() < 1e-9);
    CHECK(std::abs(vt.dot(vs)) < 1e-9);
  }
}

TEST_CASE("folded generators satisfy the H4 relations") {
  const auto r = folded_generators(e8());
  const CoxeterDiagram h4 = build_diagram("H4");
  for (int a = 0; a < 4; ++a) {
    CHECK(matrix_order(r[a]) == 2);
    for (int b = a + 1; b < 4; ++b) {
      const auto m = h4.label(a, b);
      CHECK(matrix_order(r[a] * r[b]) == (m ? m->p : 2));
    }
  }
  // the folded generators act on the tau copy as H4 reflections
  const Folding f = fold_e8_to_h4(e8());
  for (int a = 0; a < 4; ++a) {
    const Vector img = r[a] * f.beta()[a];
    CHECK((img + f.beta()[a]).max_abs() < 1e-9);
  }
}

TEST_CASE("folding requires E8") {
  const RootSystem e7 = enumerate_roots(build_diagram("E7"));
  try {
    fold_e8_to_h4(e7);
    FAIL("E7 cannot be folded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongType);
  }
  CHECK_THROWS_AS(folded_generators(e7), Error);
  // a relabelled E8 is not accepted either
  CHECK_THROWS_AS(fold_e8_to_h4(enumerate_roots(build_diagram("rank=8;edges=1-2,2-3,3-4,4-5,5-6,6-7,3-8"))), Error);
}

}
