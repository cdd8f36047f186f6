#pragma once

#include <span>
#include <utility>
#include <vector>

#include "coopdecay/config.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay {

/// Least-squares line ln(rate) = intercept + slope ln(N).
struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

struct ScalingSample {
  double n_atoms = 0.0;
  double rate = 0.0;
};

FitResult fit_power_law(std::span<const ScalingSample> samples);

struct ComparisonRow {
  double x = 0.0;  // kd or a, whichever was swept
  double first = 0.0;
  double second = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
};

struct MethodComparison {
  SpectrumMethod first = SpectrumMethod::DirectSum;
  SpectrumMethod second = SpectrumMethod::DirectSum;
  std::vector<ComparisonRow> rows;
  double max_abs = 0.0;
  double rms_abs = 0.0;
  double max_rel = 0.0;
};

/// Pointwise differences of two computation paths on a kd grid.
MethodComparison compare_methods(const ChainConfig& config, const LightModel& model, std::span<const double> k_grid,
                                 std::pair<SpectrumMethod, SpectrumMethod> methods, int threads = 1);

/// Same comparison along a lattice-constant sweep at fixed kd.
MethodComparison compare_methods_vs_lattice(const ChainConfig& config_template, const LightModel& model, double kd,
                                            std::span<const double> a_grid,
                                            std::pair<SpectrumMethod, SpectrumMethod> methods, int threads = 1);

}  // namespace coopdecay
