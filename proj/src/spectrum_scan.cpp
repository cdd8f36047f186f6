#include <algorithm>
#include <cstdio>
#include <array>
#include <optional>

#include "coopdecay/parallel.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay {
namespace {

struct MethodSpelling {
  SpectrumMethod method;
  std::string_view canonical;
  std::string_view short_name;
};

constexpr std::array<MethodSpelling, 6> kMethods{{
    {SpectrumMethod::DirectSum, "DirectSum", "direct"},
    {SpectrumMethod::Quadrature, "Quadrature", "quad"},
    {SpectrumMethod::SincApprox, "SincApprox", "sinc"},
    {SpectrumMethod::LorentzianClosedForm, "LorentzianClosedForm", "lorentz"},
    {SpectrumMethod::InfiniteChain, "InfiniteChain", "infinite"},
    {SpectrumMethod::Asymptote, "Asymptote", "asymptote"},
}};

double evaluate_with(const ChainConfig& config, const LightModel& model, SpectrumMethod method, double kd,
                     const std::optional<DecayMatrix>& matrix) {
  if (const auto* v = std::get_if<VectorialModel>(&model)) {
    switch (method) {
      case SpectrumMethod::DirectSum: return gamma_k_vec_direct(*matrix, kd);
      case SpectrumMethod::Quadrature: return gamma_k_vec_quadrature(config, v->delta, kd);
      case SpectrumMethod::SincApprox: return gamma_k_vec_sinc(config, v->delta, kd);
      case SpectrumMethod::LorentzianClosedForm: return gamma_k_vec_lorentzian(config, v->delta, kd);
      case SpectrumMethod::InfiniteChain: return gamma_k_vec_infinite(config.a, kd, v->delta, config.gamma);
      case SpectrumMethod::Asymptote:
        throw DomainError("the subradiant asymptote is only available for the scalar model");
    }
  }
  switch (method) {
    case SpectrumMethod::DirectSum: return gamma_k_direct(*matrix, kd);
    case SpectrumMethod::Quadrature: return gamma_k_quadrature(config, kd);
    case SpectrumMethod::SincApprox: return gamma_k_sinc_approx(config, kd);
    case SpectrumMethod::LorentzianClosedForm: return gamma_k_lorentzian(config, kd);
    case SpectrumMethod::InfiniteChain: return gamma_k_infinite(config.a, kd, config.gamma);
    case SpectrumMethod::Asymptote: return subradiant_asymptote(config, kd).gamma_k;
  }
  throw DomainError("unknown spectrum method");
}

std::optional<DecayMatrix> matrix_if_needed(const ChainConfig& config, const LightModel& model,
                                            SpectrumMethod method) {
  if (method != SpectrumMethod::DirectSum) return std::nullopt;
  return build_decay_matrix(config, model);
}

}  // namespace

std::string_view method_name(SpectrumMethod method) {
  for (const auto& m : kMethods)
    if (m.method == method) return m.canonical;
  return "Unknown";
}

SpectrumMethod parse_method(std::string_view name) {
  for (const auto& m : kMethods)
    if (name == m.canonical || name == m.short_name) return m.method;
  throw DomainError("unknown spectrum method '" + std::string(name) + "'");
}

std::string model_name(const LightModel& model) {
  if (const auto* v = std::get_if<VectorialModel>(&model)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "vector(delta=%.6f)", v->delta);
    return buf;
  }
  return "scalar";
}

double evaluate_gamma_k(const ChainConfig& config, const LightModel& model, SpectrumMethod method, double kd) {
  config.validate();
  return evaluate_with(config, model, method, kd, matrix_if_needed(config, model, method));
}

SpectrumResult scan_spectrum(const ChainConfig& config, const LightModel& model, SpectrumMethod method,
                             std::span<const double> k_grid, int threads) {
  config.validate();
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] >= 0.0 && k_grid[i] < kTwoPi)) throw ScanError(i, "kd outside [0, 2 pi)");
    if (i > 0 && !(k_grid[i] > k_grid[i - 1])) throw ScanError(i, "kd grid not strictly increasing");
  }
  const auto matrix = matrix_if_needed(config, model, method);
  SpectrumResult result{config, model, method, std::vector<SpectrumPoint>(k_grid.size())};
  parallel_for(k_grid.size(), threads, [&](std::size_t i) {
    try {
      result.points[i] = {k_grid[i], evaluate_with(config, model, method, k_grid[i], matrix)};
    } catch (const std::exception& e) {
      throw ScanError(i, e.what());
    }
  });
  return result;
}

LatticeScan scan_vs_lattice(const ChainConfig& config_template, const LightModel& model, SpectrumMethod method,
                            double kd, std::span<const double> a_grid, int threads) {
  config_template.validate();
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] > 0.0)) throw ScanError(i, "lattice constant must be positive");
    if (i > 0 && !(a_grid[i] > a_grid[i - 1])) throw ScanError(i, "lattice grid not strictly increasing");
  }
  LatticeScan scan{config_template.n_atoms, config_template.gamma, fold_kd(kd), model, method,
                   std::vector<LatticePoint>(a_grid.size())};
  parallel_for(a_grid.size(), threads, [&](std::size_t i) {
    try {
      const ChainConfig config(config_template.n_atoms, a_grid[i], config_template.gamma);
      scan.points[i] = {a_grid[i], evaluate_gamma_k(config, model, method, kd)};
    } catch (const std::exception& e) {
      throw ScanError(i, e.what());
    }
  });
  return scan;
}

std::vector<double> uniform_k_grid(std::size_t k) {
  std::vector<double> grid(k);
  for (std::size_t i = 0; i < k; ++i) grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(k);
  return grid;
}

}  // namespace coopdecay
