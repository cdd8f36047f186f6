#include <doctest.h>

#include <random>

#include "coopdecay/eigenmodes.hpp"

using namespace coopdecay;

TEST_CASE("eigen_decay_spectrum examples") {
  const auto one = eigen_decay_spectrum(build_decay_matrix(ChainConfig(1, 0.7, 2.0)));
  REQUIRE(one.eigenvalues.size() == 1);
  CHECK(one.eigenvalues(0) == doctest::Approx(2.0));
  CHECK(one.kd_map[0] == doctest::Approx(kPi / 2));

  const auto diag = eigen_decay_spectrum(build_decay_matrix(ChainConfig(2, kPi)));
  CHECK(diag.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(diag.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  const auto pair = eigen_decay_spectrum(build_decay_matrix(ChainConfig(2, kPi / 2)));
  CHECK(pair.eigenvalues(0) == doctest::Approx(1.0 + 2.0 / kPi).epsilon(1e-14));
  CHECK(pair.eigenvalues(1) == doctest::Approx(1.0 - 2.0 / kPi).epsilon(1e-14));
  CHECK(pair.kd_map[0] == doctest::Approx(kPi / 4));
  CHECK(pair.kd_map[1] == doctest::Approx(3 * kPi / 4));
}

TEST_CASE("trace, ordering, positivity and Rayleigh bounds") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> n_dist(1, 150);
  std::uniform_real_distribution<double> a_dist(0.01, 12.0), d_dist(0.0, kPi / 2);
  for (int i = 0; i < 40; ++i) {
    const int n = n_dist(rng);
    const double a = a_dist(rng);
    const LightModel model = (i % 2 == 0) ? LightModel{ScalarModel{}} : LightModel{vectorial(d_dist(rng))};
    const auto m = build_decay_matrix(ChainConfig(n, a), model);
    const auto r = eigen_decay_spectrum(m);
    CHECK(r.eigenvalues.sum() == doctest::Approx(n).epsilon(1e-10));
    for (int j = 1; j < n; ++j) CHECK(r.eigenvalues(j - 1) >= r.eigenvalues(j));
    CHECK(r.eigenvalues(n - 1) >= -1e-10 * n);
    const double top = r.eigenvalues(0), bottom = r.eigenvalues(n - 1);
    for (double kd : uniform_k_grid(24)) {
      const double g = is_scalar(model) ? gamma_k_direct(m, kd) : gamma_k_vec_direct(m, kd);
      CHECK(g <= top + 1e-10 * n);
      CHECK(g >= bottom - 1e-10 * n);
    }
  }
}

TEST_CASE("eigenvectors are orthonormal and diagonalize the matrix") {
  const auto m = build_decay_matrix(ChainConfig(60, 1.3));
  const auto r = eigen_decay_spectrum(m, true);
  REQUIRE(r.eigenvectors.rows() == 60);
  const Eigen::MatrixXd gram = r.eigenvectors.transpose() * r.eigenvectors;
  CHECK((gram - Eigen::MatrixXd::Identity(60, 60)).cwiseAbs().maxCoeff() <= 1e-9);
  const Eigen::MatrixXd residual = m.entries * r.eigenvectors - r.eigenvectors * r.eigenvalues.asDiagonal();
  CHECK(residual.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(eigen_decay_spectrum(m).eigenvectors.size() == 0);
}

TEST_CASE("asymmetric input is rejected") {
  auto m = build_decay_matrix(ChainConfig(4, 1.0));
  m.entries(0, 3) += 0.1;
  CHECK_THROWS_AS(eigen_decay_spectrum(m), DomainError);
}

TEST_CASE("compare_eigen_vs_gamma_k") {
  const auto one = compare_eigen_vs_gamma_k(ChainConfig(1, 1.0));
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].kd == doctest::Approx(kPi / 2));
  CHECK(one.rows[0].eigenvalue == doctest::Approx(1.0));
  CHECK(one.rows[0].gamma_k == doctest::Approx(1.0));
  CHECK(one.max_abs_deviation == doctest::Approx(0.0).epsilon(1e-14));

  const auto n10 = compare_eigen_vs_gamma_k(ChainConfig(10, kPi / 2));
  REQUIRE(n10.rows.size() == 10);
  CHECK(n10.rows.front().eigenvalue > 1.5);
  CHECK(n10.rows.back().eigenvalue < 0.1);
  for (std::size_t i = 0; i < n10.rows.size(); ++i) CHECK(n10.rows[i].index == static_cast<int>(i) + 1);

  const auto n50 = compare_eigen_vs_gamma_k(ChainConfig(50, kPi / 2), ScalarModel{}, SpectrumMethod::Quadrature, 2);
  MESSAGE("off-edge deviation N=10: " << n10.max_off_edge_deviation << ", N=50: " << n50.max_off_edge_deviation);
  CHECK(n50.max_off_edge_deviation < n10.max_off_edge_deviation);
  CHECK(n50.rms_deviation <= n50.max_abs_deviation);

  const auto vec = compare_eigen_vs_gamma_k(ChainConfig(20, kPi / 2), vectorial(kPi / 2));
  double trace = 0.0;
  for (const auto& row : vec.rows) trace += row.eigenvalue;
  CHECK(trace == doctest::Approx(20.0).epsilon(1e-12));
}
