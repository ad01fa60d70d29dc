#pragma once

// Local-orthogonal-observable witness W(mu1, mu2) and the SWAP witness V for
// two-mode states. Negative expectation values certify entanglement.

#include "cvent/gaussian_model.hpp"
#include "cvent/quadrature.hpp"

#include <complex>

namespace cvent {

inline constexpr double kEntanglementVerdictTolerance = 1e-10;

class WitnessParams {
 public:
  /// Rejects |(mu1 - mu2)(mu1 + mu2)| <= 1e-12.
  WitnessParams(double mu1, double mu2);

  [[nodiscard]] double mu1() const { return mu1_; }
  [[nodiscard]] double mu2() const { return mu2_; }
  [[nodiscard]] double mu_minus() const { return mu1_ - mu2_; }
  [[nodiscard]] double mu_plus() const { return mu1_ + mu2_; }

 private:
  double mu1_;
  double mu2_;
};

struct OptimalWitness {
  double value;
  double mu_minus;
  double mu_plus;
};

/// value < -1e-10
[[nodiscard]] bool certifies_entanglement(double witness_value);

[[nodiscard]] double witness_expectation_gaussian(const TwoModeStandardForm& s, const WitnessParams& w);

/// Phase-space route: 1 - pi sqrt|mu- mu+| * int W(mu2 conj(alpha) - mu1 alpha, alpha) d^2 alpha.
[[nodiscard]] double witness_expectation_wigner(const WignerSpec& wspec, const WitnessParams& w,
                                                const QuadratureConfig& q = {});

/// Same slice integral evaluated by exact Gaussian-moment algebra.
[[nodiscard]] double witness_expectation_moments(const WignerSpec& wspec, const WitnessParams& w);

/// Global minimum over (mu1, mu2) for a standard form with sqrt(ab) > |c_i|.
/// The minimizer is mu-/+ = -sign(c_{1,2}) sqrt(a/b), taking the negative sign when c_i = 0.
[[nodiscard]] OptimalWitness optimal_witness(const TwoModeStandardForm& s);

/// Closed form at mu = (0, 1) for the single-photon-added squeezed thermal state.
[[nodiscard]] double witness_photon_added_closed(double n, double r);

/// pi * int W(alpha, alpha) d^2 alpha
[[nodiscard]] double swap_expectation(const WignerSpec& wspec, const QuadratureConfig& q = {});

/// Tr(delta V) for delta = p|phi><phi| + (1-p)|00><00|, |phi> = (|a1>|a2> - |a2>|a1>)/sqrt(2).
[[nodiscard]] double swap_expectation_coherent_mixture(double p, std::complex<double> alpha1,
                                                       std::complex<double> alpha2);

/// Mixing weight above which the coherent mixture has a negative SWAP expectation.
[[nodiscard]] double coherent_mixture_threshold(std::complex<double> alpha1, std::complex<double> alpha2);

/// 4x2 maps from the integration variable (x, p) of alpha = x + ip to (x1, p1, x2, p2).
[[nodiscard]] Eigen::MatrixXd witness_slice_map(const WitnessParams& w);
[[nodiscard]] Eigen::MatrixXd swap_slice_map();

}  // namespace cvent
