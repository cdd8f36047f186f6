#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "coopdecay/config.hpp"

namespace coopdecay {

/// Below this argument the spherical Bessel combinations switch to their
/// Taylor series (through x^8). The closed form of j1(x)/x cancels like
/// eps / x^2, so the switch sits where both stay within ~1e-13 relative.
inline constexpr double kBesselSeriesThreshold = 0.1;

/// j0(x) = sin(x)/x.
template <typename Scalar>
Scalar sph_j0(Scalar x) {
  using std::abs;
  using std::sin;
  if (abs(x) < Scalar(kBesselSeriesThreshold)) {
    const Scalar x2 = x * x;
    return Scalar(1) - x2 / Scalar(6) * (Scalar(1) - x2 / Scalar(20) * (Scalar(1) - x2 / Scalar(42) * (Scalar(1) - x2 / Scalar(72))));
  }
  return sin(x) / x;
}

/// j1(x)/x = sin(x)/x^3 - cos(x)/x^2, finite at x = 0 with value 1/3.
template <typename Scalar>
Scalar sph_j1_over_x(Scalar x) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (abs(x) < Scalar(kBesselSeriesThreshold)) {
    const Scalar x2 = x * x;
    return Scalar(1) / Scalar(3) -
           x2 / Scalar(30) * (Scalar(1) - x2 / Scalar(28) * (Scalar(1) - x2 / Scalar(54) * (Scalar(1) - x2 / Scalar(88))));
  }
  return (sin(x) / x - cos(x)) / (x * x);
}

/// Pairwise decay rate of the scalar model, gamma * sin(x)/x with x = k0 r.
template <typename Scalar>
Scalar scalar_decay(Scalar x, Scalar gamma = Scalar(1)) {
  using std::sin;
  if (x < Scalar(0)) throw DomainError("scalar_decay: negative distance");
  if (x == Scalar(0)) return gamma;
  return gamma * sin(x) / x;
}

/// Pairwise dispersive coupling, gamma * cos(x)/x. Undefined at zero separation.
template <typename Scalar>
Scalar scalar_shift(Scalar x, Scalar gamma = Scalar(1)) {
  using std::cos;
  if (x < Scalar(0)) throw DomainError("scalar_shift: negative distance");
  if (x == Scalar(0)) throw DomainError("scalar_shift: singular at zero separation");
  return gamma * cos(x) / x;
}

/// Pairwise decay rate for dipoles aligned at angle delta to the chain axis:
/// (3 gamma / 2) [sin^2(delta) j0(x) + (3 cos^2(delta) - 1) j1(x)/x].
template <typename Scalar>
Scalar vector_decay(Scalar x, Scalar delta, Scalar gamma = Scalar(1)) {
  using std::cos;
  if (x < Scalar(0)) throw DomainError("vector_decay: negative distance");
  const Scalar c = cos(Scalar(fold_dipole_angle(static_cast<double>(delta))));
  const Scalar c2 = c * c;
  if (x == Scalar(0)) return gamma;
  return Scalar(1.5) * gamma * ((Scalar(1) - c2) * sph_j0(x) + (Scalar(3) * c2 - Scalar(1)) * sph_j1_over_x(x));
}

/// Pairwise decay kernel of the given light model at dimensionless distance x.
template <typename Scalar>
Scalar decay_kernel(const LightModel& model, Scalar x, Scalar gamma = Scalar(1)) {
  if (const auto* v = std::get_if<VectorialModel>(&model)) return vector_decay<Scalar>(x, Scalar(v->delta), gamma);
  return scalar_decay<Scalar>(x, gamma);
}

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// N x N real symmetric Toeplitz matrix of pairwise decay rates.
template <typename Scalar>
struct BasicDecayMatrix {
  LightModel model;
  Scalar gamma = Scalar(1);
  MatrixX<Scalar> entries;

  Eigen::Index size() const { return entries.rows(); }
};

using DecayMatrix = BasicDecayMatrix<double>;

/// Assembles the decay matrix from its first row; the result is exactly
/// symmetric with diagonal exactly gamma.
template <typename Scalar = double>
BasicDecayMatrix<Scalar> build_decay_matrix(const ChainConfig& config, const LightModel& model = ScalarModel{}) {
  config.validate();
  const Eigen::Index n = config.n_atoms;
  const Scalar gamma(config.gamma);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row(n);
  row(0) = gamma;
  for (Eigen::Index s = 1; s < n; ++s) row(s) = decay_kernel<Scalar>(model, Scalar(config.a) * Scalar(s), gamma);

  BasicDecayMatrix<Scalar> m{model, gamma, MatrixX<Scalar>(n, n)};
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m.entries(j, k) = row(j > k ? j - k : k - j);
  return m;
}

/// Complex coupling G_jm = Gamma_jm - i Omega_jm (j != m), G_jj = gamma. Scalar model only.
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> build_coupling_matrix(const ChainConfig& config) {
  config.validate();
  const Eigen::Index n = config.n_atoms;
  const Scalar gamma(config.gamma);
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> row(n);
  row(0) = gamma;
  for (Eigen::Index s = 1; s < n; ++s) {
    const Scalar x = Scalar(config.a) * Scalar(s);
    row(s) = std::complex<Scalar>(scalar_decay<Scalar>(x, gamma), -scalar_shift<Scalar>(x, gamma));
  }
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) g(j, k) = row(j > k ? j - k : k - j);
  return g;
}

using CouplingMatrix = Eigen::MatrixXcd;

}  // namespace coopdecay
