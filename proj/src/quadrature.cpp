#include "coopdecay/quadrature.hpp"

#include <algorithm>

namespace coopdecay {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  GaussLegendreRule rule{std::vector<double>(order), std::vector<double>(order)};
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

const GaussLegendreRule& gauss_legendre_16() {
  static const GaussLegendreRule rule = gauss_legendre(16);
  return rule;
}

double dirichlet_kernel_sq(double t, int n) {
  const double u = t - kPi * std::nearbyint(t / kPi);
  const double nn = static_cast<double>(n) * n;
  // Threshold scaled by 1/N keeps the neglected O((N u)^4) term below 1e-16.
  if (std::abs(u) < 1e-4 / n) return nn * (1.0 - (nn - 1.0) * u * u / 3.0);
  const double s = std::sin(n * u) / std::sin(u);
  return s * s;
}

double sinc_sq(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 3.0;
  const double s = std::sin(x) / x;
  return s * s;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma: argument must be positive");
  double acc = 0.0;
  while (x < 12.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / x;
  const double r2 = r * r;
  // Asymptotic series with Bernoulli coefficients.
  const double series =
      r + 0.5 * r2 +
      r * r2 * (1.0 / 6.0 - r2 * (1.0 / 30.0 - r2 * (1.0 / 42.0 - r2 * (1.0 / 30.0 - r2 * (5.0 / 66.0)))));
  return acc + series;
}

}  // namespace coopdecay
