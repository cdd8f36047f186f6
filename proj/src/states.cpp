#include "coopdecay/states.hpp"

#include <cmath>
#include <stdexcept>

namespace coopdecay {

Eigen::VectorXcd DickeState::amplitudes() const {
  config.validate();
  const Eigen::Index n = config.n_atoms;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd c(n);
  for (Eigen::Index j = 0; j < n; ++j) c(j) = std::polar(norm, kd * static_cast<double>(j));
  return c;
}

ExpectationValue expectation_coupling(const DickeState& state, const CouplingMatrix& coupling) {
  const Eigen::VectorXcd c = state.amplitudes();
  if (coupling.rows() != c.size() || coupling.cols() != c.size())
    throw std::invalid_argument("expectation_coupling: state and coupling matrix sizes differ");
  const std::complex<double> h = std::complex<double>(0.0, -0.5) * c.dot(coupling * c);
  return {h.real(), -2.0 * h.imag()};
}

std::complex<double> overlap(const ChainConfig& config, double kd, double kd_prime) {
  config.validate();
  const double n = config.n_atoms;
  // The sum over j only sees the difference modulo 2 pi.
  double diff = fold_kd(kd - kd_prime);
  if (diff >= kPi) diff -= kTwoPi;
  if (diff == 0.0) return {1.0, 0.0};
  const double dirichlet = std::sin(diff * n / 2) / std::sin(diff / 2);
  return std::polar(dirichlet / n, diff * (n - 1) / 2);
}

Eigen::MatrixXcd resolution_of_identity(const ChainConfig& config, int k_points) {
  config.validate();
  if (k_points < 1) throw DomainError("resolution_of_identity: need at least one grid point");
  const Eigen::Index n = config.n_atoms;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (int q = 0; q < k_points; ++q) {
    const Eigen::VectorXcd c = DickeState{config, kTwoPi * q / k_points}.amplitudes();
    sum.noalias() += c * c.adjoint();
  }
  return sum * (static_cast<double>(n) / k_points);
}

double completeness_residual(const ChainConfig& config, int k_points) {
  config.validate();
  if (k_points < config.n_atoms) throw DomainError("completeness_residual: need at least N grid points");
  const Eigen::Index n = config.n_atoms;
  return (resolution_of_identity(config, k_points) - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace coopdecay
