#include "coopdecay/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

namespace coopdecay {
namespace {

MethodComparison summarize(std::pair<SpectrumMethod, SpectrumMethod> methods, std::vector<ComparisonRow> rows) {
  MethodComparison cmp{methods.first, methods.second, std::move(rows)};
  double sum_sq = 0.0;
  for (auto& r : cmp.rows) {
    r.abs_diff = std::abs(r.first - r.second);
    const double scale = std::max(std::abs(r.first), std::abs(r.second));
    r.rel_diff = scale > 0.0 ? r.abs_diff / scale : 0.0;
    cmp.max_abs = std::max(cmp.max_abs, r.abs_diff);
    cmp.max_rel = std::max(cmp.max_rel, r.rel_diff);
    sum_sq += r.abs_diff * r.abs_diff;
  }
  if (!cmp.rows.empty()) cmp.rms_abs = std::sqrt(sum_sq / static_cast<double>(cmp.rows.size()));
  return cmp;
}

}  // namespace

FitResult fit_power_law(std::span<const ScalingSample> samples) {
  std::set<double> distinct;
  for (const auto& s : samples) {
    if (!(s.n_atoms >= 1.0)) throw DomainError("fit_power_law: atom numbers must be >= 1");
    if (!(s.rate > 0.0)) throw DomainError("fit_power_law: rates must be positive to take logarithms");
    distinct.insert(s.n_atoms);
  }
  if (distinct.size() < 2) throw DomainError("fit_power_law: need at least two distinct atom numbers");

  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    design(i, 0) = std::log(samples[static_cast<std::size_t>(i)].n_atoms);
    design(i, 1) = 1.0;
    y(i) = std::log(samples[static_cast<std::size_t>(i)].rate);
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd residual = y - design * coef;
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();
  const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return {coef(0), coef(1), std::clamp(r2, 0.0, 1.0), static_cast<int>(m)};
}

MethodComparison compare_methods(const ChainConfig& config, const LightModel& model, std::span<const double> k_grid,
                                 std::pair<SpectrumMethod, SpectrumMethod> methods, int threads) {
  const auto a = scan_spectrum(config, model, methods.first, k_grid, threads);
  const auto b = scan_spectrum(config, model, methods.second, k_grid, threads);
  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < k_grid.size(); ++i) rows.push_back({k_grid[i], a.points[i].gamma_k, b.points[i].gamma_k});
  return summarize(methods, std::move(rows));
}

MethodComparison compare_methods_vs_lattice(const ChainConfig& config_template, const LightModel& model, double kd,
                                            std::span<const double> a_grid,
                                            std::pair<SpectrumMethod, SpectrumMethod> methods, int threads) {
  const auto a = scan_vs_lattice(config_template, model, methods.first, kd, a_grid, threads);
  const auto b = scan_vs_lattice(config_template, model, methods.second, kd, a_grid, threads);
  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < a_grid.size(); ++i) rows.push_back({a_grid[i], a.points[i].gamma_k, b.points[i].gamma_k});
  return summarize(methods, std::move(rows));
}

}  // namespace coopdecay
