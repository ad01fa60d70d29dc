#pragma once

// Realignment (computable cross norm) criterion for n+n mode Gaussian states.
//
// The operator R(rho) R(rho)^dag is Gaussian up to a scalar: its characteristic
// function is a0 * exp(-Lambda V_RR Lambda^T / 2) with Lambda = (b1, a1, ..., b2n, a2n)
// for arguments mu_i = (a_i + i b_i)/2. The trace norm then follows from the
// Williamson spectrum of V_RR:
//
//   ||R(rho)|| = sqrt(a0) * prod_i (sqrt(2 nu_i + 1/2) + sqrt(2 nu_i - 1/2)).

#include "cvent/gaussian_model.hpp"
#include "cvent/symplectic.hpp"

#include <string_view>

namespace cvent {

enum class RealignmentVerdict { Undetected, Entangled };
enum class TwoTwoClass { Unphysical, Undetected, BoundEntangled };

struct GramCovariance {
  CovarianceMatrix covariance;
  double a0;
};

struct RealignmentResult {
  double norm;
  WilliamsonSpectrum spectrum;
  RealignmentVerdict verdict;
};

struct TwoTwoClassification {
  TwoTwoClass verdict;
  double norm;  // NaN when unphysical
};

[[nodiscard]] std::string_view to_string(RealignmentVerdict v);
[[nodiscard]] std::string_view to_string(TwoTwoClass c);

/// Covariance and scalar prefactor of R(rho)R(rho)^dag for a zero-mean state whose
/// first n modes form subsystem A and last n modes subsystem B. Only the A blocks
/// of V and V^{-1} enter:
///   V_RR = (P^T (V^{-1}) P + K^T V K) / 2,  a0 = 1 / (16^n sqrt(det V)) = Tr(rho^2),
/// where P maps Lambda to the displacement of the A quadratures and K to the
/// conjugate phase wave-vector.
[[nodiscard]] GramCovariance realigned_gram_covariance(const CovarianceMatrix& v);

[[nodiscard]] RealignmentResult realignment_norm(const CovarianceMatrix& v);

/// 1 / (4 sqrt((sqrt(ab) - |c1|)(sqrt(ab) - |c2|)))
[[nodiscard]] double realignment_norm_two_mode(const TwoModeStandardForm& s);

/// 1 / (16 (ab + c^2 - 2 sqrt(ab)|c|))
[[nodiscard]] double realignment_norm_two_two(double a, double b, double c);

[[nodiscard]] TwoTwoClassification classify_two_two(double a, double b, double c);

}  // namespace cvent
