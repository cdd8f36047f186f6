#include <cmath>

#include "coopdecay/spectrum.hpp"
#include "spectrum_detail.hpp"

namespace coopdecay {
namespace {

struct DipoleWeights {
  double cos2;
  double sin2;
  double aniso;  // 1 - 3 cos^2(delta)
};

DipoleWeights dipole_weights(double delta) {
  const double c = std::cos(fold_dipole_angle(delta));
  const double c2 = c * c;
  return {c2, 1.0 - c2, 1.0 - 3.0 * c2};
}

void require_vectorial(const DecayMatrix& matrix) {
  if (is_scalar(matrix.model)) throw DomainError("gamma_k_vec_direct: matrix was built for the scalar model");
}

}  // namespace

double gamma_k_vec_direct(const DecayMatrix& matrix, double kd) {
  require_vectorial(matrix);
  return gamma_k_direct(matrix, kd);
}

double gamma_k_vec_quadrature(const ChainConfig& config, double delta, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const auto w = dipole_weights(delta);
  const double a = config.a;
  const int n = config.n_atoms;
  // cos(theta) = (kd - 2 t) / a on the light cone.
  const auto weight = [&](double t) {
    const double u = (kd - 2.0 * t) / a;
    return (1.0 + w.cos2) + w.aniso * u * u;
  };
  return 0.75 * config.gamma * detail::cone_integral(n, a, kd, weight) / (a * n);
}

double gamma_k_vec_sinc(const ChainConfig& config, double delta, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const auto w = dipole_weights(delta);
  const double a = config.a;
  const int n = config.n_atoms;
  const auto weight = [&](double t) {
    const double u = kd - 2.0 * t;
    return w.sin2 + 0.5 * w.aniso * (u * u - a * a) / (a * a);
  };
  return 1.5 * config.gamma * n * detail::sinc_comb_integral(n, a, kd, weight) / a;
}

double gamma_k_vec_infinite(double a, double kd, double delta, double gamma) {
  if (!(a > 0.0)) throw DomainError("gamma_k_vec_infinite: a must be > 0");
  kd = fold_kd(kd);
  const auto w = dipole_weights(delta);
  const auto weight = [&](long m) {
    const double x = kd - kTwoPi * m;
    return w.sin2 + 0.5 * w.aniso * (x * x - a * a) / (a * a);
  };
  return 1.5 * gamma * kPi / a * detail::window_sum(a, kd, weight);
}

double gamma_k_vec_lorentzian(const ChainConfig& config, double delta, double kd) {
  config.validate();
  kd = fold_kd(kd);
  const auto w = dipole_weights(delta);
  const double a = config.a;
  const double n = config.n_atoms;
  const double a2 = a * a;
  const double prefactor = 1.5 * config.gamma / a;

  // Closed-form summand near the evaluation point. Far away its pieces grow
  // like (x - 2 pi m)^2 and cancel, so there the same Lorentzian integral is
  // evaluated directly in t, where the integrand is smooth and positive.
  const auto closed_form = [&](long m) {
    const double x = kd - kTwoPi * m;
    const double lo = (x - a) * n / 2;
    const double hi = (x + a) * n / 2;
    const double arc = detail::atan_difference(lo, hi, a * n);
    const double log_ratio = std::log((1.0 + hi * hi) / (1.0 + lo * lo));
    return prefactor * ((w.sin2 + w.aniso * (x * x - a2) / (2.0 * a2)) * arc + 2.0 * w.aniso / (n * a) -
                        w.aniso * x * log_ratio / (n * a2) - 2.0 * w.aniso * arc / (n * n * a2));
  };
  const auto direct = [&](long m) {
    const auto [lo, hi] = detail::cone_window(a, kd);
    const double peak = m * kPi;
    const auto integrand = [&](double t) {
      const double u = kd - 2.0 * t;
      const double y = (t - peak) * n;
      return (w.sin2 + 0.5 * w.aniso * (u * u - a2) / a2) / (1.0 + y * y);
    };
    const double nearest = std::min(std::abs(lo - peak), std::abs(hi - peak));
    const int panels = 1 + static_cast<int>(std::ceil(4.0 * a / nearest));
    return prefactor * n * detail::panel_sum(integrand, lo, hi, panels);
  };

  const auto [first, last] = detail::near_windows(a, kd);
  const auto term = [&](long m) { return (m >= first && m <= last) ? closed_form(m) : direct(m); };
  return detail::sum_m_series(first, last, kSeriesTermTolerance * config.gamma, term);
}

}  // namespace coopdecay
