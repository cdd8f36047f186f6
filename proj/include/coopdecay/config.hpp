#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

namespace coopdecay {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Dipole angle at which the aligned-dipole kernel coincides with the scalar one.
inline const double kMagicAngle = std::acos(1.0 / std::sqrt(3.0));

/// Thrown when an argument lies outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iterative numerical procedure fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

struct ScalarModel {};

/// Dipoles aligned at angle `delta` (radians) to the chain axis.
struct VectorialModel {
  double delta = kPi / 2;
};

using LightModel = std::variant<ScalarModel, VectorialModel>;

/// Folds any real angle onto [0, pi/2]; the aligned-dipole kernel depends on
/// cos^2(delta) only.
inline double fold_dipole_angle(double delta) {
  double d = std::fmod(std::abs(delta), kPi);
  if (d > kPi / 2) d = kPi - d;
  return d;
}

inline VectorialModel vectorial(double delta) { return VectorialModel{fold_dipole_angle(delta)}; }

inline bool is_scalar(const LightModel& model) { return std::holds_alternative<ScalarModel>(model); }

std::string model_name(const LightModel& model);

/// Maps kd onto [0, 2pi).
inline double fold_kd(double kd) {
  double r = std::fmod(kd, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// A chain of N emitters at r_j = d (j - 1) z, described by a = k0 d.
struct ChainConfig {
  int n_atoms = 1;
  double a = kPi / 2;
  double gamma = 1.0;

  ChainConfig() = default;
  ChainConfig(int n, double lattice, double rate = 1.0) : n_atoms(n), a(lattice), gamma(rate) { validate(); }

  void validate() const {
    if (n_atoms < 1) throw DomainError("ChainConfig: n_atoms must be >= 1");
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("ChainConfig: lattice constant a must be > 0");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("ChainConfig: gamma must be > 0");
  }
};

}  // namespace coopdecay
