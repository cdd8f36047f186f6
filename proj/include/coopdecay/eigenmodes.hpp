#pragma once

#include <Eigen/Dense>
#include <vector>

#include "coopdecay/config.hpp"
#include "coopdecay/pairwise.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay {

/// Eigenvalues of a decay matrix, largest first, with the plotting abscissa
/// kd_i = pi (i - 1/2) / N. The abscissa is a display convention that spreads
/// the ordered eigenvalues over [0, pi]; it is not a computed wavenumber.
struct EigenResult {
  Eigen::VectorXd eigenvalues;
  std::vector<double> kd_map;
  /// Column i belongs to eigenvalues(i); empty unless requested.
  Eigen::MatrixXd eigenvectors;
};

EigenResult eigen_decay_spectrum(const DecayMatrix& matrix, bool with_eigenvectors = false);

struct EigenComparisonRow {
  int index = 0;  // 1-based, matching the descending order
  double kd = 0.0;
  double eigenvalue = 0.0;
  double gamma_k = 0.0;
};

struct EigenComparison {
  std::vector<EigenComparisonRow> rows;
  double max_abs_deviation = 0.0;
  double rms_deviation = 0.0;
  /// Max |lambda_i - Gamma_k| over rows at least 0.2 away from the light line kd = a.
  double max_off_edge_deviation = 0.0;
};

/// Pairs each ordered eigenvalue with Gamma_k evaluated at its kd_i.
EigenComparison compare_eigen_vs_gamma_k(const ChainConfig& config, const LightModel& model = ScalarModel{},
                                         SpectrumMethod method = SpectrumMethod::DirectSum, int threads = 1);

}  // namespace coopdecay
