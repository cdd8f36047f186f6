#include <cmath>

#include "coopdecay/spectrum.hpp"
#include "spectrum_detail.hpp"

namespace coopdecay {

double gamma_k_direct(const DecayMatrix& matrix, double kd) {
  const Eigen::Index n = matrix.size();
  if (n == 0) throw DomainError("gamma_k_direct: empty matrix");
  kd = fold_kd(kd);
  Eigen::VectorXd c(n), s(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    c(j) = std::cos(kd * static_cast<double>(j));
    s(j) = std::sin(kd * static_cast<double>(j));
  }
  // Re(v^H M v) for real symmetric M; the imaginary part cancels identically.
  return (c.dot(matrix.entries * c) + s.dot(matrix.entries * s)) / static_cast<double>(n);
}

double gamma_k_quadrature(const ChainConfig& config, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const int n = config.n_atoms;
  const double integral = detail::cone_integral(n, config.a, kd, [](double) { return 1.0; });
  return config.gamma * integral / (config.a * n);
}

double gamma_k_sinc_approx(const ChainConfig& config, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const int n = config.n_atoms;
  const double integral = detail::sinc_comb_integral(n, config.a, kd, [](double) { return 1.0; });
  return config.gamma * n * integral / config.a;
}

double gamma_k_lorentzian(const ChainConfig& config, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const double a = config.a;
  const double n = config.n_atoms;
  const double scale = config.gamma / a;
  const auto term = [&](long m) {
    const double lo = ((kd - a) / 2 - m * kPi) * n;
    const double hi = ((kd + a) / 2 - m * kPi) * n;
    return scale * detail::atan_difference(lo, hi, a * n);
  };
  const auto [first, last] = detail::near_windows(a, kd);
  return detail::sum_m_series(first, last, kSeriesTermTolerance * config.gamma, term);
}

double gamma_k_infinite(double a, double kd, double gamma) {
  if (!(a > 0.0)) throw DomainError("gamma_k_infinite: a must be > 0");
  kd = fold_kd(kd);
  return gamma * kPi / a * detail::window_sum(a, kd, [](long) { return 1.0; });
}

AsymptoteEstimate subradiant_asymptote(const ChainConfig& config, double kd) {
  config.validate();
  const double a = config.a;
  if (!(a < kPi)) throw DomainError("subradiant_asymptote: requires a < pi");
  kd = fold_kd(kd);
  if (!(kd > a && kd < kTwoPi - a)) throw DomainError("subradiant_asymptote: kd outside the subradiant gap");
  const double n = config.n_atoms;
  const double value =
      4.0 * config.gamma / n * (1.0 / (kd * kd - a * a) + 1.0 / ((kd - kTwoPi) * (kd - kTwoPi) - a * a));
  const double edge_distance = std::min(kd - a, kTwoPi - a - kd);
  return {value, edge_distance <= 4.0 * kPi / n};
}

double superradiant_k0(const ChainConfig& config) {
  config.validate();
  return 2.0 * config.gamma / config.a * std::atan(config.a * config.n_atoms / 2.0);
}

}  // namespace coopdecay
