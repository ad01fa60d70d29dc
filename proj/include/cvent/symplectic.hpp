#pragma once

// Covariance-matrix algebra for m-mode Gaussian states.
//
// Quadratures follow x = (a + a^dag)/2, p = -i(a - a^dag)/2, so the vacuum has
// variance 1/4 in every quadrature and the uncertainty relation reads
// V + iJ/4 >= 0. Literature using hbar = 2 (vacuum variance 1) relates by
// V_here = V_theirs / 4; hbar = 1 (vacuum variance 1/2) by V_here = V_theirs / 2.
// Entries are ordered (x1, p1, x2, p2, ..., xm, pm).

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace cvent {

inline constexpr double kVacuumVariance = 0.25;
inline constexpr double kPhysicalityTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kImaginaryResidualTolerance = 1e-9;

class CovarianceMatrix {
 public:
  /// Validates dimension (even, nonzero) and symmetry; a relative asymmetry
  /// below 1e-12 is symmetrized away, anything larger is rejected.
  explicit CovarianceMatrix(const Eigen::MatrixXd& entries);

  [[nodiscard]] int modes() const { return static_cast<int>(entries_.rows() / 2); }
  [[nodiscard]] int dimension() const { return static_cast<int>(entries_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& matrix() const { return entries_; }
  [[nodiscard]] double operator()(int i, int j) const { return entries_(i, j); }

  /// Product state of m vacua.
  static CovarianceMatrix vacuum(int modes);

 private:
  Eigen::MatrixXd entries_;
};

struct WilliamsonSpectrum {
  std::vector<double> nus;  // ascending
  double a0 = 1.0;
};

/// Block-diagonal direct sum of m copies of [[0, 1], [-1, 0]].
[[nodiscard]] Eigen::MatrixXd symplectic_form(int modes);

/// Smallest eigenvalue of the Hermitian matrix V + iJ/4.
[[nodiscard]] double uncertainty_margin(const CovarianceMatrix& v);

[[nodiscard]] bool is_physical(const CovarianceMatrix& v);

/// Moduli of the eigenvalue pairs +-i nu of J^{-1} V. Throws NumericDomainError
/// when V is not positive definite or the spectrum is not purely imaginary.
[[nodiscard]] WilliamsonSpectrum symplectic_eigenvalues(const CovarianceMatrix& v);

/// Flips the sign of p_j for every (0-based) mode j listed in modes_b.
[[nodiscard]] CovarianceMatrix partial_transpose(const CovarianceMatrix& v,
                                                 std::span<const int> modes_b);

[[nodiscard]] bool is_ppt(const CovarianceMatrix& v, std::span<const int> modes_b);

/// Checks S^T J S = J to the given absolute tolerance.
[[nodiscard]] bool is_symplectic(const Eigen::MatrixXd& s, double tol = 1e-10);

}  // namespace cvent
