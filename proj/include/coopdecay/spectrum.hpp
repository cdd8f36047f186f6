#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coopdecay/config.hpp"
#include "coopdecay/pairwise.hpp"

namespace coopdecay {

/// Which computation path produced a collective decay rate.
enum class SpectrumMethod { DirectSum, Quadrature, SincApprox, LorentzianClosedForm, InfiniteChain, Asymptote };

std::string_view method_name(SpectrumMethod method);
/// Accepts the canonical names and the short CLI spellings (direct, quad, sinc, lorentz, infinite, asymptote).
SpectrumMethod parse_method(std::string_view name);

struct SpectrumPoint {
  double kd = 0.0;
  double gamma_k = 0.0;
};

/// Sampled collective decay spectrum, rates in units of gamma.
struct SpectrumResult {
  ChainConfig config;
  LightModel model;
  SpectrumMethod method = SpectrumMethod::DirectSum;
  std::vector<SpectrumPoint> points;
};

struct LatticePoint {
  double a = 0.0;
  double gamma_k = 0.0;
};

/// Collective decay rate at fixed kd as a function of the lattice constant.
struct LatticeScan {
  int n_atoms = 1;
  double gamma = 1.0;
  double kd = 0.0;
  LightModel model;
  SpectrumMethod method = SpectrumMethod::DirectSum;
  std::vector<LatticePoint> points;
};

/// A per-point failure inside a scan; carries the grid index.
class ScanError : public std::runtime_error {
 public:
  ScanError(std::size_t index, const std::string& what)
      : std::runtime_error("grid point " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Tail terms of the m-sums stop once a term drops below this (times gamma).
inline constexpr double kSeriesTermTolerance = 1e-12;
inline constexpr long kMaxSeriesIndex = 1'000'000;

// ---- scalar model -----------------------------------------------------------

/// (1/N) sum_{j,m} M_jm cos(kd (j - m)), i.e. (1/N) v^H M v with v_j = e^{i kd j}.
/// Works for either light model; the model is whatever built the matrix.
double gamma_k_direct(const DecayMatrix& matrix, double kd);

/// Exact collective rate from the Dirichlet-kernel integral over the light cone.
double gamma_k_quadrature(const ChainConfig& config, double kd);

/// Sum over m of sinc^2 peaks integrated across the light-cone window.
double gamma_k_sinc_approx(const ChainConfig& config, double kd);

/// Lorentzian replacement of the sinc^2 peaks; sum of arctan differences.
double gamma_k_lorentzian(const ChainConfig& config, double kd);

/// Infinite-chain limit: gamma pi/a times the number of windows
/// (2 m pi - a, 2 m pi + a) containing kd. Half weight on a window edge.
double gamma_k_infinite(double a, double kd, double gamma = 1.0);

struct AsymptoteEstimate {
  double gamma_k = 0.0;
  /// kd lies within 4 pi / N of a band edge, where the large-N form is unreliable.
  bool near_band_edge = false;
};

/// Large-N subradiant rate inside the gap (a < kd < 2 pi - a, requires a < pi).
AsymptoteEstimate subradiant_asymptote(const ChainConfig& config, double kd);

/// (2 gamma / a) arctan(a N / 2): the m = 0 Lorentzian term at kd = 0.
double superradiant_k0(const ChainConfig& config);

// ---- aligned-dipole (vectorial) model ---------------------------------------

double gamma_k_vec_direct(const DecayMatrix& matrix, double kd);
double gamma_k_vec_quadrature(const ChainConfig& config, double delta, double kd);
double gamma_k_vec_sinc(const ChainConfig& config, double delta, double kd);
double gamma_k_vec_infinite(double a, double kd, double delta, double gamma = 1.0);
double gamma_k_vec_lorentzian(const ChainConfig& config, double delta, double kd);

// ---- dispatch and scans -----------------------------------------------------

/// Evaluates one point through the requested path. DirectSum builds the matrix
/// on every call; use scan_spectrum for grids.
double evaluate_gamma_k(const ChainConfig& config, const LightModel& model, SpectrumMethod method, double kd);

/// Evaluates the spectrum on a sorted kd grid in [0, 2 pi). Points are
/// independent and may run concurrently; output order follows the grid.
SpectrumResult scan_spectrum(const ChainConfig& config, const LightModel& model, SpectrumMethod method,
                             std::span<const double> k_grid, int threads = 1);

/// Evaluates Gamma_k at fixed kd over a sorted grid of positive lattice constants.
LatticeScan scan_vs_lattice(const ChainConfig& config_template, const LightModel& model, SpectrumMethod method,
                            double kd, std::span<const double> a_grid, int threads = 1);

/// K uniformly spaced points 2 pi i / K, i = 0..K-1.
std::vector<double> uniform_k_grid(std::size_t k);

}  // namespace coopdecay
