#include <doctest.h>

#include <random>

#include "coopdecay/pairwise.hpp"
#include "oracles.hpp"

using namespace coopdecay;

TEST_CASE("scalar_decay values and limits") {
  CHECK(scalar_decay(0.0) == 1.0);
  CHECK(std::abs(scalar_decay(kPi)) < 1e-15);
  CHECK(scalar_decay(kPi / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(scalar_decay(kPi / 2, 3.0) == doctest::Approx(6.0 / kPi).epsilon(1e-15));
  CHECK_THROWS_AS(scalar_decay(-1e-9), DomainError);
}

TEST_CASE("scalar_decay is bounded by gamma and gamma/x") {
  for (double x = 0.01; x < 200.0; x *= 1.07) {
    const double v = std::abs(scalar_decay(x));
    CHECK(v <= 1.0);
    CHECK(v <= 1.0 / x + 1e-16);
  }
}

TEST_CASE("scalar_shift values and singularity") {
  CHECK(std::abs(scalar_shift(kPi / 2)) < 1e-16);
  CHECK(scalar_shift(kPi) == doctest::Approx(-1.0 / kPi).epsilon(1e-15));
  CHECK(scalar_shift(2 * kPi) == doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(scalar_shift(0.0), DomainError);
}

TEST_CASE("vector_decay at zero separation is gamma for every angle") {
  for (double delta : {0.0, 0.3, kMagicAngle, 1.2, kPi / 2}) CHECK(vector_decay(0.0, delta) == 1.0);
}

TEST_CASE("vector_decay matches an independent Bessel evaluation") {
  for (double delta : {0.0, 0.4, kPi / 2}) {
    for (double x : {1e-5, 5e-4, 2e-3, 0.1, 1.0, kPi, 7.3, 40.0}) {
      const double expected = static_cast<double>(oracle::vector_kernel(x, delta));
      CHECK(vector_decay(x, delta) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // x = pi, delta = pi/2: (3/2) (-1) j1(pi)/pi = -(3/2) / pi^2.
  CHECK(vector_decay(kPi, kPi / 2) == doctest::Approx(-1.5 / (kPi * kPi)).epsilon(1e-14));
}

TEST_CASE("small-x series agrees with long double evaluation across the switch") {
  for (double x : {1e-6, 1e-4, 9.99e-4, 1.001e-3, 5e-3}) {
    const oracle::real xl = x;
    const oracle::real j1x = oracle::j1_over_x_series(xl);
    CHECK(sph_j1_over_x(x) == doctest::Approx(static_cast<double>(j1x)).epsilon(1e-12));
    CHECK(sph_j0(x) == doctest::Approx(static_cast<double>(std::sin(xl) / xl)).epsilon(1e-15));
  }
}

TEST_CASE("magic angle reduces the vector kernel to the scalar kernel") {
  for (double x = 0.05; x <= 100.0; x += 0.05) {
    const double s = scalar_decay(x);
    CHECK(std::abs(vector_decay(x, kMagicAngle) - s) <= 1e-12 * std::abs(s) + 1e-15);
  }
}

TEST_CASE("replacing cos^2(delta) by 1/3 gives the scalar kernel") {
  for (double x : {0.2, 1.0, 3.0, 11.0, 57.0}) {
    const double avg = 1.5 * ((1.0 - 1.0 / 3.0) * sph_j0(x) + 0.0 * sph_j1_over_x(x));
    CHECK(avg == doctest::Approx(scalar_decay(x)).epsilon(1e-15));
  }
}

TEST_CASE("angular-average identities for j0 and j0 - 2 j1/x") {
  for (double x : {0.1, 1.0, kPi, 10.0}) {
    const auto avg0 = oracle::angular_average(x, 0);
    const auto avg2 = oracle::angular_average(x, 2);
    CHECK(std::abs(static_cast<double>(avg0.real()) - sph_j0(x)) < 1e-10);
    CHECK(std::abs(static_cast<double>(avg0.imag())) < 1e-10);
    CHECK(std::abs(static_cast<double>(avg2.real()) - (sph_j0(x) - 2 * sph_j1_over_x(x))) < 1e-10);
  }
}

TEST_CASE("dipole angles fold onto [0, pi/2]") {
  CHECK(fold_dipole_angle(kPi) == doctest::Approx(0.0));
  CHECK(fold_dipole_angle(3 * kPi / 4) == doctest::Approx(kPi / 4));
  CHECK(fold_dipole_angle(-kPi / 3) == doctest::Approx(kPi / 3));
  CHECK(vector_decay(2.0, kPi - 0.3) == doctest::Approx(vector_decay(2.0, 0.3)).epsilon(1e-14));
}

TEST_CASE("build_decay_matrix small cases") {
  const auto m1 = build_decay_matrix(ChainConfig(1, 1.0));
  CHECK(m1.entries.rows() == 1);
  CHECK(m1.entries(0, 0) == 1.0);

  const auto m2 = build_decay_matrix(ChainConfig(2, kPi));
  CHECK(m2.entries(0, 0) == 1.0);
  CHECK(std::abs(m2.entries(0, 1)) < 1e-15);

  const auto m3 = build_decay_matrix(ChainConfig(3, kPi / 2));
  CHECK(m3.entries(0, 1) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(m3.entries(1, 2) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(std::abs(m3.entries(0, 2)) < 1e-15);
}

TEST_CASE("decay matrices are symmetric Toeplitz with exact diagonal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> n_dist(1, 40);
  std::uniform_real_distribution<double> a_dist(0.05, 12.0);
  std::uniform_real_distribution<double> d_dist(0.0, kPi / 2);
  for (int trial = 0; trial < 50; ++trial) {
    const ChainConfig cfg(n_dist(rng), a_dist(rng), 1.0 + trial * 0.01);
    for (const LightModel model : {LightModel{ScalarModel{}}, LightModel{vectorial(d_dist(rng))}}) {
      const auto m = build_decay_matrix(cfg, model);
      CHECK((m.entries.array() == m.entries.transpose().array()).all());
      CHECK((m.entries.diagonal().array() == cfg.gamma).all());
      for (Eigen::Index j = 1; j < m.size(); ++j)
        for (Eigen::Index k = 1; k < m.size(); ++k) CHECK(m.entries(j, k) == m.entries(j - 1, k - 1));
    }
  }
}

TEST_CASE("long double instantiation agrees with double") {
  const auto md = build_decay_matrix<double>(ChainConfig(6, 0.9), vectorial(0.7));
  const auto ml = build_decay_matrix<long double>(ChainConfig(6, 0.9), vectorial(0.7));
  CHECK((md.entries - ml.entries.cast<double>()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("coupling matrix") {
  const auto g1 = build_coupling_matrix(ChainConfig(1, 1.0));
  CHECK(g1(0, 0) == std::complex<double>(1.0, 0.0));

  const auto g2 = build_coupling_matrix(ChainConfig(2, kPi / 2));
  CHECK(g2(0, 1).real() == doctest::Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(std::abs(g2(0, 1).imag()) < 1e-16);

  const auto g3 = build_coupling_matrix(ChainConfig(2, kPi));
  CHECK(std::abs(g3(0, 1).real()) < 1e-15);
  CHECK(g3(0, 1).imag() == doctest::Approx(1.0 / kPi).epsilon(1e-15));  // -i * (-1/pi)

  const ChainConfig cfg(9, 1.3);
  const auto g = build_coupling_matrix(cfg);
  const auto m = build_decay_matrix(cfg);
  CHECK((g.real() - m.entries).cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.imag().diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(ChainConfig(0, 1.0), DomainError);
  CHECK_THROWS_AS(ChainConfig(3, 0.0), DomainError);
  CHECK_THROWS_AS(ChainConfig(3, 1.0, -1.0), DomainError);
}
