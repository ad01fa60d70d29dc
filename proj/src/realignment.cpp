#include "cvent/realignment.hpp"

#include "cvent/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace cvent {

namespace {

constexpr double kVerdictTolerance = 1e-10;
constexpr double kClampWindow = 1e-9;

}  // namespace

std::string_view to_string(RealignmentVerdict v) {
  return v == RealignmentVerdict::Entangled ? "entangled" : "undetected";
}

std::string_view to_string(TwoTwoClass c) {
  switch (c) {
    case TwoTwoClass::Unphysical:
      return "unphysical";
    case TwoTwoClass::Undetected:
      return "undetected";
    case TwoTwoClass::BoundEntangled:
      return "bound_entangled";
  }
  return "unknown";
}

GramCovariance realigned_gram_covariance(const CovarianceMatrix& v) {
  if (v.modes() % 2 != 0) {
    throw InvalidArgument("realignment needs an n+n split, got " + std::to_string(v.modes()) + " modes");
  }
  if (!is_physical(v)) throw InvalidArgument("realignment input is not a physical covariance matrix");

  const int n = v.modes() / 2;
  const int dim = v.dimension();
  // Lambda slots: 2i -> b_i, 2i+1 -> a_i. Displacement of alpha_j is (mu_j + conj(mu_{n+j}))/2,
  // the phase wave-vector is (b_j + b_{n+j}, a_{n+j} - a_j) on (x_j, p_j).
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    const int xa = 2 * j, pa = 2 * j + 1;
    const int b_j = 2 * j, a_j = 2 * j + 1;
    const int b_partner = 2 * (n + j), a_partner = 2 * (n + j) + 1;
    p(xa, a_j) = 0.25;
    p(xa, a_partner) = 0.25;
    p(pa, b_j) = 0.25;
    p(pa, b_partner) = -0.25;
    k(xa, b_j) = 1.0;
    k(xa, b_partner) = 1.0;
    k(pa, a_partner) = 1.0;
    k(pa, a_j) = -1.0;
  }
  const Eigen::MatrixXd& vm = v.matrix();
  const Eigen::MatrixXd g = vm.llt().solve(Eigen::MatrixXd::Identity(dim, dim));
  Eigen::MatrixXd gram = 0.5 * (p.transpose() * g * p + k.transpose() * vm * k);
  gram = 0.5 * (gram + gram.transpose());
  const double a0 = 1.0 / (std::pow(16.0, n) * std::sqrt(vm.determinant()));
  return {CovarianceMatrix(gram), a0};
}

RealignmentResult realignment_norm(const CovarianceMatrix& v) {
  const GramCovariance gram = realigned_gram_covariance(v);
  WilliamsonSpectrum spectrum = symplectic_eigenvalues(gram.covariance);
  spectrum.a0 = gram.a0;
  double norm = std::sqrt(gram.a0);
  for (double nu : spectrum.nus) {
    double excess = 2.0 * nu - 0.5;
    if (excess < -kClampWindow) {
      throw NumericDomainError("realignment: symplectic eigenvalue " + std::to_string(nu) +
                               " of the Gram covariance is below 1/4");
    }
    excess = std::max(excess, 0.0);
    norm *= std::sqrt(2.0 * nu + 0.5) + std::sqrt(excess);
  }
  const auto verdict = norm > 1.0 + kVerdictTolerance ? RealignmentVerdict::Entangled : RealignmentVerdict::Undetected;
  return {norm, std::move(spectrum), verdict};
}

double realignment_norm_two_mode(const TwoModeStandardForm& s) {
  const double root_ab = std::sqrt(s.a * s.b);
  const double g1 = root_ab - std::abs(s.c1);
  const double g2 = root_ab - std::abs(s.c2);
  if (!(g1 > 0.0) || !(g2 > 0.0)) {
    throw NumericDomainError("realignment_norm_two_mode: sqrt(ab) <= |c_i| is a singular limit");
  }
  return 1.0 / (4.0 * std::sqrt(g1 * g2));
}

double realignment_norm_two_two(double a, double b, double c) {
  const double gap = std::sqrt(a * b) - std::abs(c);
  if (!(gap > 0.0)) throw NumericDomainError("realignment_norm_two_two: |c| >= sqrt(ab)");
  // ab + c^2 - 2 sqrt(ab)|c| written as a square
  return 1.0 / (16.0 * gap * gap);
}

TwoTwoClassification classify_two_two(double a, double b, double c) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (a < kVacuumVariance || b < kVacuumVariance) {
    throw InvalidArgument("classify_two_two requires a, b >= 1/4");
  }
  if (std::abs(c) > family_threshold(a, b)) {
    return {TwoTwoClass::Unphysical, nan};
  }
  const double norm = realignment_norm_two_two(a, b, c);
  if (norm > 1.0 + kVerdictTolerance) {
    static constexpr std::array<int, 2> kModesB{2, 3};
    if (!is_ppt(two_two_family(a, b, c), kModesB)) {
      throw std::logic_error("classify_two_two: realignment-detected state is not PPT (a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ", c=" + std::to_string(c) + ")");
    }
    return {TwoTwoClass::BoundEntangled, norm};
  }
  return {TwoTwoClass::Undetected, norm};
}

}  // namespace cvent
