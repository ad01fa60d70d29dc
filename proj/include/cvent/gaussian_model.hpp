#pragma once

#include "cvent/polynomial.hpp"
#include "cvent/symplectic.hpp"

#include <optional>

namespace cvent {

/// Two-mode covariance in standard form: A = diag(a, a), B = diag(b, b), C = diag(c1, c2).
struct TwoModeStandardForm {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c1 = 0.0;
  double c2 = 0.0;

  /// Validates a, b >= 1/4, ab >= c_i^2 and physicality of the expansion.
  static TwoModeStandardForm make(double a, double b, double c1, double c2);

  [[nodiscard]] CovarianceMatrix covariance() const;
};

struct TwoTwoFamilyParams {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c = 0.0;
};

/// Zero-mean Wigner function: normPrefactor * poly(xi) * gaussian(xi; V), or the bare
/// Gaussian when no prefactor polynomial is attached.
struct WignerSpec {
  CovarianceMatrix gaussian_covariance;
  Eigen::VectorXd mean;
  std::optional<Polynomial> poly_prefactor;
  double norm_prefactor = 1.0;

  [[nodiscard]] int modes() const { return gaussian_covariance.modes(); }
  [[nodiscard]] double operator()(const Eigen::VectorXd& xi) const;
};

[[nodiscard]] CovarianceMatrix standard_two_mode(double a, double b, double c1, double c2);

/// a = b = (1+2n)cosh(2r)/4, c1 = -c2 = (1+2n)sinh(2r)/4.
[[nodiscard]] TwoModeStandardForm squeezed_thermal_params(double n, double r);

/// 8x8 covariance [[a I4, c R], [c R^T, b I4]]; physicality is not enforced.
[[nodiscard]] CovarianceMatrix two_two_family(double a, double b, double c);

/// Largest |c| for which two_two_family(a, b, c) is a valid state.
[[nodiscard]] double family_threshold(double a, double b);

/// Single-photon-added (on mode 2) two-mode symmetric squeezed thermal state.
[[nodiscard]] WignerSpec photon_added_sts_wigner(double n, double r);

[[nodiscard]] WignerSpec gaussian_wigner(const CovarianceMatrix& v);

/// Full phase-space integral by exact moment algebra. Requires a zero mean.
[[nodiscard]] double wigner_total_mass(const WignerSpec& w);

}  // namespace cvent
