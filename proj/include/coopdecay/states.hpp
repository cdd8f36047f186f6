#pragma once

#include <Eigen/Dense>
#include <complex>

#include "coopdecay/config.hpp"
#include "coopdecay/pairwise.hpp"

namespace coopdecay {

/// Phase-winding single-excitation state |k> with amplitudes e^{i kd (j-1)} / sqrt(N).
struct DickeState {
  ChainConfig config;
  double kd = 0.0;

  Eigen::VectorXcd amplitudes() const;
};

/// <k|H|k> for H = -(i/2) sum G_jm s_j^+ s_m (hbar = 1), split into the
/// energy shift Re<H> and the decay rate -2 Im<H>.
struct ExpectationValue {
  double shift = 0.0;
  double decay = 0.0;
};

ExpectationValue expectation_coupling(const DickeState& state, const CouplingMatrix& coupling);

/// <k'|k> for unit-norm states: the Dirichlet kernel of kd - kd' divided by N
/// times the phase e^{i (kd - kd')(N - 1)/2}. Equals 1 when kd = kd'.
std::complex<double> overlap(const ChainConfig& config, double kd, double kd_prime);

/// (N / K) sum_q |k_q><k_q| over kd_q = 2 pi q / K, any K >= 1. For K < N
/// the Dirichlet kernel aliases and the result is not the identity.
Eigen::MatrixXcd resolution_of_identity(const ChainConfig& config, int k_points);

/// Max-norm distance between (N / K) sum_q |k_q><k_q| on the uniform grid
/// kd_q = 2 pi q / K and the identity. Exact (to rounding) for K >= N;
/// K < N is rejected.
double completeness_residual(const ChainConfig& config, int k_points);

}  // namespace coopdecay
