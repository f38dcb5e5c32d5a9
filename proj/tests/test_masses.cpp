#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "gosset/error.hpp"
#include "gosset/masses.hpp"

using namespace gosset;

namespace {

constexpr double kPi = std::numbers::pi;

const RootSystem& e8() {
  static const RootSystem rs = enumerate_roots(build_diagram("E8"));
  return rs;
}

}  // namespace

TEST_SUITE("masses") {

TEST_CASE("reference spectrum at unit scale") {
  const double reference[8] = {1.0, 1.61803, 1.98904, 2.40487, 2.95630, 3.21834, 3.89116, 4.78339};
  const MassSpectrum s = zamolodchikov_spectrum(1.0);
  for (int k = 0; k < 8; ++k) CHECK(std::abs(s.masses[k] - reference[k]) < 5e-6);
  CHECK(s.m1 == 1.0);
}

TEST_CASE("closed forms") {
  const auto m = zamolodchikov_spectrum(2.5).masses;
  const double m1 = 2.5;
  const double m2 = 2 * m1 * std::cos(kPi / 5);
  CHECK(m[1] == doctest::Approx(m2).epsilon(1e-15));
  CHECK(m[2] == doctest::Approx(2 * m1 * std::cos(kPi / 30)).epsilon(1e-15));
  CHECK(m[3] == doctest::Approx(2 * m2 * std::cos(7 * kPi / 30)).epsilon(1e-15));
  CHECK(m[4] == doctest::Approx(2 * m2 * std::cos(2 * kPi / 15)).epsilon(1e-15));
  CHECK(m[5] == doctest::Approx(2 * m2 * std::cos(kPi / 30)).epsilon(1e-15));
  CHECK(m[6] == doctest::Approx(4 * m2 * std::cos(kPi / 5) * std::cos(7 * kPi / 30)).epsilon(1e-15));
  CHECK(m[7] == doctest::Approx(4 * m2 * std::cos(kPi / 5) * std::cos(2 * kPi / 15)).epsilon(1e-15));
  const double tau = std::numbers::phi;
  CHECK(m[1] / m[0] == doctest::Approx(tau).epsilon(1e-15));
  CHECK(m[5] / m[2] == doctest::Approx(tau).epsilon(1e-15));
  CHECK(m[6] / m[3] == doctest::Approx(tau).epsilon(1e-15));
  CHECK(m[7] / m[4] == doctest::Approx(tau).epsilon(1e-15));
  CHECK(std::is_sorted(m.begin(), m.end()));
}

TEST_CASE("scale equivariance") {
  const auto one = zamolodchikov_spectrum(1.0).masses;
  for (double k : {0.4745, 3.0, 1e-3, 250.0}) {
    const auto m = zamolodchikov_spectrum(k).masses;
    for (int i = 0; i < 8; ++i) CHECK(m[i] == doctest::Approx(k * one[i]).epsilon(1e-15));
  }
}

TEST_CASE("Toda spectrum is basis independent") {
  std::mt19937 rng(99);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd g(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = nd(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  std::vector<Vector> rotated;
  for (const auto& a : e8().simples()) {
    Vector v(8);
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) v[i] += q(i, k) * a[k];
    rotated.push_back(v);
  }
  const auto base = toda_masses(toda_mass_matrix(e8()));
  const auto turned = toda_masses(toda_mass_matrix(enumerate_roots(build_diagram("E8"), rotated)));
  for (int k = 0; k < 8; ++k) CHECK(std::abs(base[k] * base[k] - turned[k] * turned[k]) < 1e-9);
}

TEST_CASE("invalid scale") {
  CHECK_THROWS_AS(zamolodchikov_spectrum(0.0), Error);
  CHECK_THROWS_AS(zamolodchikov_spectrum(-1.0), Error);
}

TEST_CASE("Toda mass matrix") {
  const TodaMassMatrix t = toda_mass_matrix(e8());
  CHECK(t.marks == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3});
  REQUIRE(t.affine_roots.size() == 9);
  Vector sum(8);
  for (int i = 0; i < 9; ++i) sum += t.affine_roots[i] * t.marks[i];
  CHECK(sum.max_abs() < 1e-12);  // n_0 alpha_0 + ... + n_8 alpha_8 = 0
  CHECK(t.m.trace() == doctest::Approx(60.0));
  CHECK(t.m.max_abs_diff(t.m.transpose()) < 1e-14);
  CHECK(t.n.rows() == 9);
}

TEST_CASE("Toda masses against an Eigen diagonalization") {
  const TodaMassMatrix t = toda_mass_matrix(e8());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(8, 8);
  for (int i = 0; i < 9; ++i) {
    Eigen::VectorXd a(8);
    for (int k = 0; k < 8; ++k) a(k) = t.affine_roots[i][k];
    m += t.marks[i] * a * a.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const auto masses = toda_masses(t);
  REQUIRE(masses.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(masses[k] == doctest::Approx(std::sqrt(es.eigenvalues()(k))).epsilon(1e-12));
  const auto z = zamolodchikov_spectrum(1.0).masses;
  CHECK(ratio_report(masses, z).max_rel_dev < 1e-9);
}

TEST_CASE("N matrix has one null direction") {
  const TodaMassMatrix t = toda_mass_matrix(e8());
  Eigen::MatrixXd n(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) n(i, j) = t.n(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(n);
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-9);
  CHECK(es.eigenvalues()(1) > 0.1);
  // null vector is sqrt(n_i)
  Eigen::VectorXd v(9);
  for (int i = 0; i < 9; ++i) v(i) = std::sqrt(double(t.marks[i]));
  CHECK((n * v).norm() < 1e-12);
}

TEST_CASE("Toda requires E8") {
  try {
    toda_mass_matrix(enumerate_roots(build_diagram("E7")));
    FAIL("E7");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongType);
  }
}

TEST_CASE("ratio report") {
  const std::vector<double> a{3.0, 1.0, 2.0};
  const std::vector<double> b{20.0, 30.0, 10.0};
  const RatioReport r = ratio_report(a, b);
  CHECK(r.max_rel_dev == 0.0);
  CHECK(r.pairing_a == std::vector<std::size_t>{1, 2, 0});
  CHECK(r.pairing_b == std::vector<std::size_t>{2, 0, 1});
  CHECK(r.ratios_a == std::vector<double>{1.0, 2.0, 3.0});
  const std::vector<double> c{1.0, 2.0, 3.3};
  CHECK(ratio_report(a, c).max_rel_dev == doctest::Approx(0.3 / 3.3));  // relative to the larger
  CHECK_THROWS_AS(ratio_report(a, std::vector<double>{1.0}), Error);
  CHECK_THROWS_AS(ratio_report(std::vector<double>{}, std::vector<double>{}), Error);
  CHECK_THROWS_AS(ratio_report(a, std::vector<double>{1.0, 0.0, 2.0}), Error);
}

}
