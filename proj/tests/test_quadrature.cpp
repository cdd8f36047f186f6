#include <doctest.h>

#include <numeric>

#include "coopdecay/quadrature.hpp"
#include "oracles.hpp"

using namespace coopdecay;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {1, 2, 5, 16, 24}) {
    const auto rule = gauss_legendre(order);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    const int degree = 2 * order - 2;  // even, so the exact integral is nonzero
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], degree);
    CHECK(s == doctest::Approx(2.0 / (degree + 1)).epsilon(1e-13));
  }
  const auto& r16 = gauss_legendre_16();
  for (std::size_t i = 1; i < r16.nodes.size(); ++i) CHECK(r16.nodes[i] > r16.nodes[i - 1]);
}

TEST_CASE("integrate_panels on smooth and oscillatory integrands") {
  const auto r1 = integrate_panels([](double x) { return std::exp(x); }, 0.0, 1.0, 0.5);
  CHECK(r1.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  const auto r2 = integrate_panels([](double x) { return std::cos(200 * x); }, 0.0, 1.3, kPi / 400);
  CHECK(r2.value == doctest::Approx(std::sin(260.0) / 200).epsilon(1e-11));
  CHECK(r2.error_estimate <= 1e-10 * std::abs(r2.value));
  CHECK(integrate_panels([](double) { return 1.0; }, 2.0, 2.0, 0.1).value == 0.0);
  CHECK_THROWS_AS(integrate_panels([](double) { return 1.0; }, 1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("integrate_panels reports the achieved error when it cannot converge") {
  const auto step = [](double x) { return x < 0.1234567 ? 0.0 : 1.0; };
  QuadratureOptions opts;
  opts.rel_tol = 1e-14;
  opts.max_refinements = 1;
  try {
    integrate_panels(step, 0.0, 1.0, 0.5, opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("guarded Dirichlet kernel matches the explicit exponential sum") {
  for (int n : {1, 2, 7, 30, 400}) {
    for (double t : {0.0, 1e-9, 3e-5, 0.1, 1.0, kPi - 1e-7, kPi, 2.5 * kPi, -3 * kPi + 2e-6}) {
      // |sum_j e^{2 i t j}|^2
      std::complex<oracle::real> acc = 0;
      for (int j = 0; j < n; ++j) acc += std::polar<oracle::real>(1.0L, 2.0L * t * j);
      const double expected = static_cast<double>(std::norm(acc));
      CHECK(dirichlet_kernel_sq(t, n) == doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(dirichlet_kernel_sq(0.0, n) == static_cast<double>(n) * n);
    CHECK(dirichlet_kernel_sq(kPi, n) == doctest::Approx(static_cast<double>(n) * n).epsilon(1e-14));
  }
}

TEST_CASE("sinc_sq") {
  CHECK(sinc_sq(0.0) == 1.0);
  CHECK(sinc_sq(1e-5) == doctest::Approx(1.0 - 1e-10 / 3).epsilon(1e-15));
  CHECK(sinc_sq(kPi) < 1e-30);
  CHECK(sinc_sq(-2.0) == doctest::Approx(std::pow(std::sin(2.0) / 2.0, 2)).epsilon(1e-15));
}

TEST_CASE("trigamma") {
  CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
  CHECK(trigamma(0.5) == doctest::Approx(kPi * kPi / 2).epsilon(1e-14));
  // psi'(x) = sum_k 1/(x + k)^2
  for (double x : {0.3, 2.7, 15.0, 1234.5}) {
    oracle::real s = 0;
    for (long k = 0; k < 2'000'000; ++k) s += 1.0L / ((x + k) * (x + k));
    s += 1.0L / (x + 2'000'000 - 0.5L);  // integral tail estimate
    CHECK(trigamma(x) == doctest::Approx(static_cast<double>(s)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trigamma(0.0), DomainError);
}
