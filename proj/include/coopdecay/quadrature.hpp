#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "coopdecay/config.hpp"

namespace coopdecay {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// The 16-point rule used by every panel integration in the library.
const GaussLegendreRule& gauss_legendre_16();

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_refinements = 8;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

namespace detail {

template <typename F>
double panel_sum(const F& f, double lo, double hi, int panels) {
  const auto& rule = gauss_legendre_16();
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = lo + p * width;
    const double half = 0.5 * width;
    const double mid = left + half;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += s * half;
  }
  return total;
}

}  // namespace detail

/// Composite 16-point Gauss-Legendre on uniform panels no wider than
/// `max_panel_width` (and at least 8 panels). The panel count is doubled
/// until two successive estimates agree to the requested tolerance.
template <typename F>
QuadratureResult integrate_panels(const F& f, double lo, double hi, double max_panel_width,
                                  const QuadratureOptions& options = {}) {
  if (hi == lo) return {};
  if (!(hi > lo)) throw DomainError("integrate_panels: empty or reversed interval");
  int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) / max_panel_width)));
  double coarse = detail::panel_sum(f, lo, hi, panels);
  double err = 0.0;
  for (int level = 0; level <= options.max_refinements; ++level) {
    panels *= 2;
    const double fine = detail::panel_sum(f, lo, hi, panels);
    err = std::abs(fine - coarse);
    if (err <= options.rel_tol * std::abs(fine) || err <= options.abs_tol) return {fine, err, panels};
    coarse = fine;
  }
  throw ConvergenceError("integrate_panels: tolerance not reached", err);
}

/// sin^2(N t)/sin^2(t), evaluated about the nearest multiple of pi so the
/// removable singularities at t = m pi return N^2.
double dirichlet_kernel_sq(double t, int n);

/// sinc^2(x) = sin^2(x)/x^2 with the limit 1 at x = 0.
double sinc_sq(double x);

/// Trigamma function psi'(x) for x > 0.
double trigamma(double x);

}  // namespace coopdecay
