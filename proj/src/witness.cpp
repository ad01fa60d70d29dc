#include "cvent/witness.hpp"

#include "cvent/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cvent {

namespace {

void require_two_modes(const WignerSpec& w) {
  if (w.modes() != 2) {
    throw InvalidArgument("witness evaluation needs a two-mode state, got " + std::to_string(w.modes()));
  }
}

}  // namespace

WitnessParams::WitnessParams(double mu1, double mu2) : mu1_(mu1), mu2_(mu2) {
  if (!std::isfinite(mu1) || !std::isfinite(mu2)) throw InvalidArgument("witness parameters must be finite");
  if (std::abs(mu_minus() * mu_plus()) <= 1e-12) {
    throw InvalidArgument("witness parameters need (mu1 - mu2)(mu1 + mu2) != 0");
  }
}

bool certifies_entanglement(double witness_value) {
  return witness_value < -kEntanglementVerdictTolerance;
}

double witness_expectation_gaussian(const TwoModeStandardForm& s, const WitnessParams& w) {
  const double mm = w.mu_minus();
  const double mp = w.mu_plus();
  const double f1 = s.a + s.b * mm * mm + 2.0 * s.c1 * mm;
  const double f2 = s.a + s.b * mp * mp + 2.0 * s.c2 * mp;
  if (!(f1 > 0.0) || !(f2 > 0.0)) {
    throw NumericDomainError("witness closed form: non-positive factor (" + std::to_string(f1) + ", " +
                             std::to_string(f2) + "); input is unphysical");
  }
  return 1.0 - std::sqrt(std::abs(mm * mp)) / (2.0 * std::sqrt(f1 * f2));
}

Eigen::MatrixXd witness_slice_map(const WitnessParams& w) {
  // alpha1 = mu2 conj(alpha) - mu1 alpha = -mu_- x - i mu_+ p
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(4, 2);
  l(0, 0) = -w.mu_minus();
  l(1, 1) = -w.mu_plus();
  l(2, 0) = 1.0;
  l(3, 1) = 1.0;
  return l;
}

Eigen::MatrixXd swap_slice_map() {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(4, 2);
  l(0, 0) = l(2, 0) = 1.0;
  l(1, 1) = l(3, 1) = 1.0;
  return l;
}

double witness_expectation_wigner(const WignerSpec& wspec, const WitnessParams& w, const QuadratureConfig& q) {
  require_two_modes(wspec);
  const double integral = wigner_slice_integral(wspec, witness_slice_map(w), q);
  return 1.0 - std::numbers::pi * std::sqrt(std::abs(w.mu_minus() * w.mu_plus())) * integral;
}

double witness_expectation_moments(const WignerSpec& wspec, const WitnessParams& w) {
  require_two_modes(wspec);
  const double integral = wigner_slice_integral_moments(wspec, witness_slice_map(w));
  return 1.0 - std::numbers::pi * std::sqrt(std::abs(w.mu_minus() * w.mu_plus())) * integral;
}

OptimalWitness optimal_witness(const TwoModeStandardForm& s) {
  const double root_ab = std::sqrt(s.a * s.b);
  const double g1 = root_ab - std::abs(s.c1);
  const double g2 = root_ab - std::abs(s.c2);
  if (!(g1 > 0.0) || !(g2 > 0.0)) {
    throw NumericDomainError("optimal_witness: sqrt(ab) <= |c_i| is the singular pure-EPR limit");
  }
  const double scale = std::sqrt(s.a / s.b);
  const double mu_minus = s.c1 < 0.0 ? scale : -scale;
  const double mu_plus = s.c2 < 0.0 ? scale : -scale;
  return {1.0 - 1.0 / (4.0 * std::sqrt(g1 * g2)), mu_minus, mu_plus};
}

double witness_photon_added_closed(double n, double r) {
  if (!(n >= 0.0) || !(r >= 0.0)) throw InvalidArgument("photon-added state needs n, r >= 0");
  const double q = 1.0 + 2.0 * n;
  const double ch = std::cosh(r);
  return 1.0 - std::exp(4.0 * r) * n * (1.0 + n) / (q * q * (ch * ch + n * std::cosh(2.0 * r)));
}

double swap_expectation(const WignerSpec& wspec, const QuadratureConfig& q) {
  require_two_modes(wspec);
  return std::numbers::pi * wigner_slice_integral(wspec, swap_slice_map(), q);
}

double swap_expectation_coherent_mixture(double p, std::complex<double> alpha1, std::complex<double> alpha2) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("mixing weight p must lie in [0, 1]");
  const double overlap = std::exp(-std::norm(alpha1 - alpha2));
  return p * (overlap - 1.0) + 1.0 - p;
}

double coherent_mixture_threshold(std::complex<double> alpha1, std::complex<double> alpha2) {
  return 1.0 / (2.0 - std::exp(-std::norm(alpha1 - alpha2)));
}

}  // namespace cvent
