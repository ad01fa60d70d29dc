#include "cvent/symplectic.hpp"

#include "cvent/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace cvent {

CovarianceMatrix::CovarianceMatrix(const Eigen::MatrixXd& entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols() || entries.rows() % 2 != 0) {
    throw InvalidArgument("covariance matrix must be square with even nonzero dimension, got " +
                          std::to_string(entries.rows()) + "x" + std::to_string(entries.cols()));
  }
  if (!entries.allFinite()) {
    throw InvalidArgument("covariance matrix has non-finite entries");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    throw InvalidArgument("covariance matrix is not symmetric (max |V - V^T| = " +
                          std::to_string(asym) + ")");
  }
  entries_ = 0.5 * (entries + entries.transpose());
}

CovarianceMatrix CovarianceMatrix::vacuum(int modes) {
  if (modes < 1) throw InvalidArgument("vacuum needs at least one mode");
  return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * modes, 2 * modes) * kVacuumVariance);
}

Eigen::MatrixXd symplectic_form(int modes) {
  if (modes < 1) throw InvalidArgument("symplectic_form: number of modes must be positive");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    j(2 * i, 2 * i + 1) = 1.0;
    j(2 * i + 1, 2 * i) = -1.0;
  }
  return j;
}

double uncertainty_margin(const CovarianceMatrix& v) {
  const Eigen::MatrixXcd h =
      v.matrix().cast<std::complex<double>>() +
      std::complex<double>(0.0, kVacuumVariance) * symplectic_form(v.modes()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_physical(const CovarianceMatrix& v) {
  return uncertainty_margin(v) >= -kPhysicalityTolerance;
}

WilliamsonSpectrum symplectic_eigenvalues(const CovarianceMatrix& v) {
  Eigen::LLT<Eigen::MatrixXd> llt(v.matrix());
  if (llt.info() != Eigen::Success) {
    throw NumericDomainError("symplectic_eigenvalues: covariance matrix is not positive definite");
  }
  const int m = v.modes();
  // J^{-1} = -J
  const Eigen::MatrixXd k = -symplectic_form(m) * v.matrix();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(k, false);
  if (solver.info() != Eigen::Success) {
    throw NumericDomainError("symplectic_eigenvalues: eigen-solve failed");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<double> moduli;
  moduli.reserve(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).real()) > kImaginaryResidualTolerance * scale) {
      throw NumericDomainError("symplectic_eigenvalues: real residual " +
                               std::to_string(ev(i).real()) + " in spectrum of J^{-1}V");
    }
    moduli.push_back(std::abs(ev(i).imag()));
  }
  std::sort(moduli.begin(), moduli.end());
  WilliamsonSpectrum out;
  out.nus.reserve(m);
  // conjugate pairs sit next to each other after sorting
  for (int i = 0; i < m; ++i) out.nus.push_back(0.5 * (moduli[2 * i] + moduli[2 * i + 1]));
  return out;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& v, std::span<const int> modes_b) {
  if (modes_b.empty()) throw InvalidArgument("partial_transpose: empty mode set");
  Eigen::MatrixXd out = v.matrix();
  std::vector<bool> seen(v.modes(), false);
  for (int mode : modes_b) {
    if (mode < 0 || mode >= v.modes()) {
      throw InvalidArgument("partial_transpose: mode index " + std::to_string(mode) +
                            " out of range for " + std::to_string(v.modes()) + " modes");
    }
    if (seen[mode]) continue;
    seen[mode] = true;
    const int p = 2 * mode + 1;
    out.row(p) *= -1.0;
    out.col(p) *= -1.0;
  }
  return CovarianceMatrix(out);
}

bool is_ppt(const CovarianceMatrix& v, std::span<const int> modes_b) {
  return is_physical(partial_transpose(v, modes_b));
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) return false;
  const Eigen::MatrixXd j = symplectic_form(static_cast<int>(s.rows() / 2));
  return (s.transpose() * j * s - j).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace cvent
