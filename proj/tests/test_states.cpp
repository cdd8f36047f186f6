#include <doctest.h>

#include <random>

#include "coopdecay/spectrum.hpp"
#include "coopdecay/states.hpp"
#include "oracles.hpp"

using namespace coopdecay;

TEST_CASE("DickeState amplitudes") {
  const DickeState s{ChainConfig(7, 1.0), 0.9};
  const auto c = s.amplitudes();
  REQUIRE(c.size() == 7);
  CHECK(c.norm() == doctest::Approx(1.0).epsilon(1e-15));
  for (int j = 0; j < 7; ++j) {
    CHECK(c(j).real() == doctest::Approx(std::cos(0.9 * j) / std::sqrt(7.0)));
    CHECK(c(j).imag() == doctest::Approx(std::sin(0.9 * j) / std::sqrt(7.0)));
  }
}

TEST_CASE("expectation_coupling examples") {
  const ChainConfig c1(1, 1.0);
  CHECK(expectation_coupling({c1, 0.4}, build_coupling_matrix(c1)).decay == doctest::Approx(1.0).epsilon(1e-15));

  const ChainConfig c20(20, kPi / 2);
  const auto g20 = build_coupling_matrix(c20);
  const double direct0 = static_cast<double>(oracle::gamma_k_scalar(20, kPi / 2, 0.0));
  CHECK(expectation_coupling({c20, 0.0}, g20).decay == doctest::Approx(direct0).epsilon(1e-12));
  CHECK(expectation_coupling({c20, c20.a}, g20).decay ==
        doctest::Approx(gamma_k_direct(build_decay_matrix(c20), c20.a)).epsilon(1e-12));

  CHECK_THROWS_AS(expectation_coupling({ChainConfig(3, 1.0), 0.0}, g20), std::invalid_argument);
}

TEST_CASE("decay part of <k|H|k> is Gamma_k") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> n_dist(1, 50);
  std::uniform_real_distribution<double> a_dist(0.05, 15.0), k_dist(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const ChainConfig c(n_dist(rng), a_dist(rng));
    const double kd = k_dist(rng);
    const auto e = expectation_coupling({c, kd}, build_coupling_matrix(c));
    CHECK(std::abs(e.decay - gamma_k_direct(build_decay_matrix(c), kd)) <= 1e-12 * c.n_atoms);
    CHECK(std::isfinite(e.shift));
  }
}

TEST_CASE("shift part is the Omega quadratic form") {
  const ChainConfig c(6, 1.7);
  const double kd = 0.6;
  double expected = 0.0;
  for (int j = 0; j < 6; ++j)
    for (int m = 0; m < 6; ++m)
      if (j != m) expected += std::cos(kd * (j - m)) * scalar_shift(c.a * std::abs(j - m)) / 6.0;
  // Re <H> = -(1/2) Re(c^dag G c) with G = Gamma - i Omega off the diagonal.
  CHECK(expectation_coupling({c, kd}, build_coupling_matrix(c)).shift == doctest::Approx(-0.5 * expected).epsilon(1e-12));
}

TEST_CASE("overlap") {
  const ChainConfig c(12, 1.0);
  CHECK(std::abs(overlap(c, 1.3, 1.3) - 1.0) <= 1e-15);
  CHECK(std::abs(overlap(c, 1.0 + kTwoPi / 12, 1.0)) <= 1e-14);

  const auto o = overlap(ChainConfig(4, 1.0), 0.0, kPi / 2);
  const auto ref = oracle::inner_product(4, 0.0L, kPi / 2);
  CHECK(o.real() == doctest::Approx(static_cast<double>(ref.real())).epsilon(1e-14));
  CHECK(o.imag() == doctest::Approx(static_cast<double>(ref.imag())).epsilon(1e-14));

  const auto grid = uniform_k_grid(48);
  for (int n : {1, 5, 16}) {
    const ChainConfig cn(n, 1.0);
    for (double k : grid)
      for (double kp : grid) {
        const auto v = overlap(cn, k, kp);
        const auto w = oracle::inner_product(n, k, kp);
        CHECK(std::abs(v - std::complex<double>(w)) <= 1e-13);
        CHECK(std::abs(v) <= 1.0 + 1e-14);
        if (n > 1 && k != kp) CHECK(std::abs(v) < 1.0 - 1e-6);
        CHECK(std::abs(v - std::conj(overlap(cn, kp, k))) <= 4e-15);
      }
  }
  // Tiny separations go through the guarded branch without losing the limit.
  CHECK(std::abs(overlap(ChainConfig(30, 1.0), 2.0 + 1e-12, 2.0) - 1.0) <= 1e-10);
}

TEST_CASE("completeness") {
  CHECK(completeness_residual(ChainConfig(1, 1.0), 1) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(completeness_residual(ChainConfig(8, 1.0), 8) <= 1e-12);
  for (int n : {2, 9, 25})
    for (int k : {n, n + 1, 2 * n + 3}) CHECK(completeness_residual(ChainConfig(n, 1.0), k) <= 1e-12);
  CHECK_THROWS_AS(completeness_residual(ChainConfig(8, 1.0), 7), DomainError);

  const auto aliased = resolution_of_identity(ChainConfig(8, 1.0), 7);
  const double err = (aliased - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff();
  MESSAGE("N=8, K=7 residual " << err);
  CHECK(err >= 0.5);
  CHECK(err <= 2.0);
}
