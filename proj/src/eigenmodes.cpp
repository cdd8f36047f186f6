#include "coopdecay/eigenmodes.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace coopdecay {

EigenResult eigen_decay_spectrum(const DecayMatrix& matrix, bool with_eigenvectors) {
  const Eigen::Index n = matrix.size();
  if (n == 0) throw DomainError("eigen_decay_spectrum: empty matrix");
  if (matrix.entries.cols() != n) throw DomainError("eigen_decay_spectrum: matrix not square");
  if (matrix.entries != matrix.entries.transpose())
    throw DomainError("eigen_decay_spectrum: matrix not symmetric");

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix.entries, with_eigenvectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigen_decay_spectrum: symmetric eigensolver did not converge (N = " +
                               std::to_string(n) + ")",
                           std::numeric_limits<double>::quiet_NaN());

  EigenResult result;
  result.eigenvalues = solver.eigenvalues().reverse();
  if (with_eigenvectors) result.eigenvectors = solver.eigenvectors().rowwise().reverse();
  result.kd_map.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    result.kd_map[static_cast<std::size_t>(i)] = kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return result;
}

EigenComparison compare_eigen_vs_gamma_k(const ChainConfig& config, const LightModel& model, SpectrumMethod method,
                                         int threads) {
  const auto matrix = build_decay_matrix(config, model);
  const auto eig = eigen_decay_spectrum(matrix);
  const auto spectrum = method == SpectrumMethod::DirectSum
                            ? SpectrumResult{config, model, method, {}}
                            : scan_spectrum(config, model, method, eig.kd_map, threads);

  EigenComparison cmp;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < eig.kd_map.size(); ++i) {
    const double kd = eig.kd_map[i];
    const double gk = method == SpectrumMethod::DirectSum ? gamma_k_direct(matrix, kd) : spectrum.points[i].gamma_k;
    const double lambda = eig.eigenvalues(static_cast<Eigen::Index>(i));
    cmp.rows.push_back({static_cast<int>(i) + 1, kd, lambda, gk});
    const double dev = std::abs(lambda - gk);
    cmp.max_abs_deviation = std::max(cmp.max_abs_deviation, dev);
    if (std::abs(kd - config.a) >= 0.2) cmp.max_off_edge_deviation = std::max(cmp.max_off_edge_deviation, dev);
    sum_sq += dev * dev;
  }
  cmp.rms_deviation = std::sqrt(sum_sq / static_cast<double>(cmp.rows.size()));
  return cmp;
}

}  // namespace coopdecay
