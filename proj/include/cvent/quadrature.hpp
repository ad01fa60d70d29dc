#pragma once

#include "cvent/gaussian_model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace cvent {

enum class QuadratureScheme { GaussHermite, Adaptive };

struct QuadratureConfig {
  QuadratureScheme scheme = QuadratureScheme::GaussHermite;
  int order = 80;        // nodes per axis, Gauss-Hermite
  double radius = 12.0;  // half-width of the whitened box, adaptive scheme
};

/// Nodes and weights for the weight function exp(-x^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch eigen-solve followed by Newton polishing on the orthonormal
/// Hermite recurrence; weights from the Christoffel sum.
[[nodiscard]] GaussHermiteRule gauss_hermite_rule(int order);

/// Integral over y in R^d of W(L y) dy, where L is 2m x d. The Gaussian core of W
/// restricted to the image of L is whitened before the tensor rule is applied.
/// Throws ConvergenceError when order n and 2n (Gauss-Hermite) or successive
/// tolerances (adaptive) disagree by more than 1e-6 relative.
[[nodiscard]] double wigner_slice_integral(const WignerSpec& w, const Eigen::MatrixXd& l,
                                           const QuadratureConfig& q);

/// Same integral done analytically: Gaussian normalization times the Isserlis
/// expectation of the pulled-back polynomial.
[[nodiscard]] double wigner_slice_integral_moments(const WignerSpec& w, const Eigen::MatrixXd& l);

}  // namespace cvent
