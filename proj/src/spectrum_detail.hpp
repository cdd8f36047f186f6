#pragma once

#include <cmath>

#include "coopdecay/quadrature.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay::detail {

/// Light-cone window in t = (kd - a cos(theta)) / 2.
struct ConeWindow {
  double lo;
  double hi;
};

inline ConeWindow cone_window(double a, double kd) { return {(kd - a) / 2, (kd + a) / 2}; }

/// Integral of weight(t) sin^2(N t)/sin^2(t) over the light-cone window.
template <typename Weight>
double cone_integral(int n, double a, double kd, const Weight& weight) {
  const auto [lo, hi] = cone_window(a, kd);
  const auto integrand = [&](double t) { return weight(t) * dirichlet_kernel_sq(t, n); };
  return integrate_panels(integrand, lo, hi, kPi / (2.0 * n)).value;
}

/// Integral of weight(t) sum_m sinc^2((t - m pi) N) over the light-cone window.
/// Peaks near the window are summed explicitly; the two outer tails are
/// resummed with the trigamma function, sum_{m > M} 1/(t - m pi)^2 = psi'(M + 1 - t/pi)/pi^2.
template <typename Weight>
double sinc_comb_integral(int n, double a, double kd, const Weight& weight) {
  const auto [lo, hi] = cone_window(a, kd);
  const long m_lo = static_cast<long>(std::floor(lo / kPi)) - 1;
  const long m_hi = static_cast<long>(std::ceil(hi / kPi)) + 1;
  const double nn = static_cast<double>(n) * n;
  const auto integrand = [&](double t) {
    double peaks = 0.0;
    for (long m = m_lo; m <= m_hi; ++m) peaks += sinc_sq((t - m * kPi) * n);
    const double u = t - kPi * std::nearbyint(t / kPi);
    const double s = std::sin(n * u);
    const double tails = trigamma(m_hi + 1 - t / kPi) + trigamma(t / kPi - m_lo + 1);
    return weight(t) * (peaks + s * s * tails / (nn * kPi * kPi));
  };
  return integrate_panels(integrand, lo, hi, kPi / (2.0 * n)).value;
}

/// arctan(hi) - arctan(lo) given width = hi - lo, without cancellation when
/// both arguments share a sign.
inline double atan_difference(double lo, double hi, double width) {
  if (lo * hi > 0.0) return std::atan(width / (1.0 + lo * hi));
  return std::atan(hi) - std::atan(lo);
}

/// Sums term(m) over the near range [m_first, m_last] and then outward on both
/// sides until a term falls below tol. Throws past |m| = kMaxSeriesIndex.
template <typename Term>
double sum_m_series(long m_first, long m_last, double tol, const Term& term) {
  double near = 0.0;
  for (long m = m_first; m <= m_last; ++m) near += term(m);
  double tail = 0.0;
  for (int side : {+1, -1}) {
    for (long m = side > 0 ? m_last + 1 : m_first - 1;; m += side) {
      if (std::labs(m) > kMaxSeriesIndex)
        throw ConvergenceError("m-series did not reach tolerance before |m| cap", std::abs(term(m)));
      const double v = term(m);
      tail += v;
      if (std::abs(v) < tol) break;
    }
  }
  return near + tail;
}

/// Range of m with |kd - 2 pi m| <= a + 2 pi.
inline std::pair<long, long> near_windows(double a, double kd) {
  return {static_cast<long>(std::ceil((kd - a - kTwoPi) / kTwoPi)),
          static_cast<long>(std::floor((kd + a + kTwoPi) / kTwoPi))};
}

/// Weighted count of rectangular windows (2 m pi - a, 2 m pi + a) holding kd;
/// window edges count with half weight. weight(m) multiplies window m.
template <typename Weight>
double window_sum(double a, double kd, const Weight& weight) {
  const long m_first = static_cast<long>(std::floor((kd - a) / kTwoPi));
  const long m_last = static_cast<long>(std::ceil((kd + a) / kTwoPi));
  double total = 0.0;
  for (long m = m_first; m <= m_last; ++m) {
    const double dist = std::abs(kd - kTwoPi * m);
    if (dist < a) total += weight(m);
    else if (dist == a) total += 0.5 * weight(m);
  }
  return total;
}

}  // namespace coopdecay::detail
