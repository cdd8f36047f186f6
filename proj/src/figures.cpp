#include <array>
#include <cstdio>
#include <stdexcept>

#include "coopdecay/analysis.hpp"
#include "coopdecay/cli_io.hpp"
#include "coopdecay/eigenmodes.hpp"
#include "coopdecay/parallel.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay {
namespace {

constexpr std::array<double, 4> kPanelLattice{kPi / 2, 3 * kPi / 2, 5 * kPi / 2, 7 * kPi / 2};
constexpr std::array<char, 4> kPanelLetter{'a', 'b', 'c', 'd'};
constexpr std::size_t kSpectrumGrid = 256;
constexpr std::size_t kLatticeGrid = 200;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

CsvTable start_table(std::vector<std::string> header, const std::vector<double>& sweep) {
  CsvTable t{std::move(header), {}};
  for (double x : sweep) t.rows.push_back({x});
  return t;
}

void append_column(CsvTable& t, const SpectrumResult& r) {
  for (std::size_t i = 0; i < r.points.size(); ++i) t.rows[i].push_back(r.points[i].gamma_k);
}

void append_column(CsvTable& t, const LatticeScan& s) {
  for (std::size_t i = 0; i < s.points.size(); ++i) t.rows[i].push_back(s.points[i].gamma_k);
}

// Gamma_k vs kd for N = 10, 50 (sinc-comb sum) and the infinite chain.
std::vector<NamedTable> figure1(int threads) {
  std::vector<NamedTable> out;
  const auto grid = uniform_k_grid(kSpectrumGrid);
  for (std::size_t p = 0; p < kPanelLattice.size(); ++p) {
    const double a = kPanelLattice[p];
    auto t = start_table({"kd", "gamma_sinc_N10", "gamma_sinc_N50", "gamma_infinite"}, grid);
    append_column(t, scan_spectrum(ChainConfig(10, a), ScalarModel{}, SpectrumMethod::SincApprox, grid, threads));
    append_column(t, scan_spectrum(ChainConfig(50, a), ScalarModel{}, SpectrumMethod::SincApprox, grid, threads));
    append_column(t, scan_spectrum(ChainConfig(1, a), ScalarModel{}, SpectrumMethod::InfiniteChain, grid, threads));
    out.push_back({std::string("fig1") + kPanelLetter[p] + ".csv", std::move(t)});
  }
  return out;
}

// Gamma_k vs k0 d at kd = 0 and kd = pi; N = 10 with the infinite-chain curves, and N = 100.
std::vector<NamedTable> figure2(int threads) {
  const auto grid = linspace(0.01, 4 * kPi, kLatticeGrid);
  auto a = start_table({"k0d", "gamma_sinc_kd0", "gamma_sinc_kdpi", "gamma_infinite_kd0", "gamma_infinite_kdpi"}, grid);
  const ChainConfig n10(10, kPi / 2);
  append_column(a, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::SincApprox, 0.0, grid, threads));
  append_column(a, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::SincApprox, kPi, grid, threads));
  append_column(a, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::InfiniteChain, 0.0, grid, threads));
  append_column(a, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::InfiniteChain, kPi, grid, threads));

  auto b = start_table({"k0d", "gamma_sinc_kd0", "gamma_sinc_kdpi"}, grid);
  const ChainConfig n100(100, kPi / 2);
  append_column(b, scan_vs_lattice(n100, ScalarModel{}, SpectrumMethod::SincApprox, 0.0, grid, threads));
  append_column(b, scan_vs_lattice(n100, ScalarModel{}, SpectrumMethod::SincApprox, kPi, grid, threads));
  return {{"fig2a.csv", std::move(a)}, {"fig2b.csv", std::move(b)}};
}

// Exact integral vs Lorentzian closed form at kd = pi, N = 10.
std::vector<NamedTable> figure3(int threads) {
  const auto grid = linspace(0.1, 4 * kPi, kLatticeGrid);
  auto t = start_table({"k0d", "gamma_quad", "gamma_lorentz"}, grid);
  const ChainConfig n10(10, kPi / 2);
  append_column(t, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::Quadrature, kPi, grid, threads));
  append_column(t, scan_vs_lattice(n10, ScalarModel{}, SpectrumMethod::LorentzianClosedForm, kPi, grid, threads));
  return {{"fig3.csv", std::move(t)}};
}

// Ordered eigenvalues against Gamma_k at kd_i = pi (i - 1/2)/N. The panel (b)
// atom number is quoted both as 50 and as 100, so both are emitted.
std::vector<NamedTable> figure4(int threads) {
  std::vector<NamedTable> out;
  const auto grid = uniform_k_grid(kSpectrumGrid);
  for (int n : {10, 50, 100}) {
    const ChainConfig config(n, kPi / 2);
    const auto cmp = compare_eigen_vs_gamma_k(config, ScalarModel{}, SpectrumMethod::Quadrature, threads);
    CsvTable t{{"i", "kd_i", "lambda_i", "gamma_quad"}, {}};
    for (const auto& r : cmp.rows) t.rows.push_back({static_cast<double>(r.index), r.kd, r.eigenvalue, r.gamma_k});
    const std::string tag = n == 10 ? "fig4a" : "fig4b_N" + std::to_string(n);
    out.push_back({tag + "_eigen.csv", std::move(t)});

    auto curve = start_table({"kd", "gamma_quad"}, grid);
    append_column(curve, scan_spectrum(config, ScalarModel{}, SpectrumMethod::Quadrature, grid, threads));
    out.push_back({tag + "_curve.csv", std::move(curve)});
  }
  return out;
}

// Infinite chain: scalar vs aligned dipoles at delta = pi/2.
std::vector<NamedTable> figure5(int threads) {
  std::vector<NamedTable> out;
  const auto grid = uniform_k_grid(2 * kSpectrumGrid);
  for (std::size_t p = 0; p < kPanelLattice.size(); ++p) {
    const ChainConfig config(1, kPanelLattice[p]);
    auto t = start_table({"kd", "gamma_infinite_scalar", "gamma_infinite_vector_deltapi2"}, grid);
    append_column(t, scan_spectrum(config, ScalarModel{}, SpectrumMethod::InfiniteChain, grid, threads));
    append_column(t, scan_spectrum(config, vectorial(kPi / 2), SpectrumMethod::InfiniteChain, grid, threads));
    out.push_back({std::string("fig5") + kPanelLetter[p] + ".csv", std::move(t)});
  }
  return out;
}

// Aligned dipoles (delta = pi/2), N = 100, kd = 0 and kd = pi vs k0 d.
std::vector<NamedTable> figure6(int threads) {
  const auto grid = linspace(0.01, 4 * kPi, kLatticeGrid);
  auto t = start_table({"k0d", "gamma_sinc_vector_kd0", "gamma_sinc_vector_kdpi"}, grid);
  const ChainConfig n100(100, kPi / 2);
  append_column(t, scan_vs_lattice(n100, vectorial(kPi / 2), SpectrumMethod::SincApprox, 0.0, grid, threads));
  append_column(t, scan_vs_lattice(n100, vectorial(kPi / 2), SpectrumMethod::SincApprox, kPi, grid, threads));
  return {{"fig6.csv", std::move(t)}};
}

// Subradiant rate at kd = pi, k0 d = pi/2 vs N for delta = pi/2 and delta = 0.
std::vector<NamedTable> figure7(int threads) {
  const std::vector<double> atoms{10, 20, 50, 100, 200, 400, 800};
  auto t = start_table({"N", "gamma_quad_vector_deltapi2", "gamma_quad_vector_delta0"}, atoms);
  for (double delta : {kPi / 2, 0.0}) {
    std::vector<double> rates(atoms.size());
    parallel_for(atoms.size(), threads, [&](std::size_t i) {
      rates[i] = gamma_k_vec_quadrature(ChainConfig(static_cast<int>(atoms[i]), kPi / 2), delta, kPi);
    });
    for (std::size_t i = 0; i < atoms.size(); ++i) t.rows[i].push_back(rates[i]);
  }
  return {{"fig7.csv", std::move(t)}};
}

}  // namespace

std::vector<NamedTable> figure_datasets(int figure, int threads) {
  switch (figure) {
    case 1: return figure1(threads);
    case 2: return figure2(threads);
    case 3: return figure3(threads);
    case 4: return figure4(threads);
    case 5: return figure5(threads);
    case 6: return figure6(threads);
    case 7: return figure7(threads);
    default: throw DomainError("figure number must be in 1..7");
  }
}

}  // namespace coopdecay
