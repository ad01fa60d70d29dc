#include "cvent/quadrature.hpp"

#include "cvent/errors.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace cvent {

namespace {

constexpr double kConvergenceTolerance = 1e-6;

// Orthonormal Hermite recurrence; returns p_n(x) and p_{n-1}(x) and accumulates
// sum_{k<n} p_k(x)^2.
struct HermiteValues {
  double pn;
  double pn1;
  double christoffel;
};

HermiteValues hermite_orthonormal(int n, double x) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += cur * cur;
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev, sum};
}

// Everything the tensor rules need about the slice y -> W(L y).
struct WhitenedSlice {
  int dims = 0;
  double prefactor = 0.0;     // constant in front of exp(-|z|^2) after the change of variables
  double gaussian_mass = 0.0; // integral of the bare Gaussian part (convergence scale)
  std::optional<Polynomial> poly;  // polynomial in z
};

WhitenedSlice whiten(const WignerSpec& w, const Eigen::MatrixXd& l) {
  const int dim = w.gaussian_covariance.dimension();
  if (l.rows() != dim || l.cols() < 1 || l.cols() > dim) {
    throw InvalidArgument("slice map must be " + std::to_string(dim) + " x d with 1 <= d <= " +
                          std::to_string(dim));
  }
  if (w.mean.size() != 0 && !w.mean.isZero(0.0)) {
    throw InvalidArgument("phase-space integration supports zero-mean Wigner functions only");
  }
  const Eigen::MatrixXd& v = w.gaussian_covariance.matrix();
  Eigen::LLT<Eigen::MatrixXd> v_llt(v);
  if (v_llt.info() != Eigen::Success) {
    throw NumericDomainError("Gaussian core covariance is not positive definite");
  }
  const Eigen::MatrixXd q = l.transpose() * v_llt.solve(l);
  Eigen::LLT<Eigen::MatrixXd> q_llt(q);
  if (q_llt.info() != Eigen::Success) {
    throw NumericDomainError("restricted quadratic form is not positive definite");
  }
  const int d = static_cast<int>(l.cols());
  const Eigen::MatrixXd lc = q_llt.matrixL();
  // y = sqrt(2) Lc^{-T} z  =>  y^T Q y / 2 = |z|^2
  const Eigen::MatrixXd to_y =
      std::sqrt(2.0) * lc.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(d, d));
  const double jac = std::pow(2.0, 0.5 * d) / lc.diagonal().prod();
  const double det_v = v.determinant();
  const double core = w.norm_prefactor * std::pow(2.0 * std::numbers::pi, -w.modes()) / std::sqrt(det_v);

  WhitenedSlice s;
  s.dims = d;
  s.prefactor = core * jac;
  s.gaussian_mass = std::abs(s.prefactor) * std::pow(std::numbers::pi, 0.5 * d);
  if (w.poly_prefactor) s.poly = w.poly_prefactor->compose_linear(l * to_y);
  return s;
}

double tensor_gauss_hermite(const WhitenedSlice& s, const GaussHermiteRule& rule) {
  const int n = static_cast<int>(rule.nodes.size());
  if (!s.poly) {
    double one_axis = 0.0;
    for (double wt : rule.weights) one_axis += wt;
    return s.prefactor * std::pow(one_axis, s.dims);
  }
  std::vector<int> idx(s.dims, 0);
  Eigen::VectorXd z(s.dims);
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int k = 0; k < s.dims; ++k) {
      z(k) = rule.nodes[idx[k]];
      weight *= rule.weights[idx[k]];
    }
    total += weight * (*s.poly)(z);
    int k = 0;
    while (k < s.dims && ++idx[k] == n) idx[k++] = 0;
    if (k == s.dims) break;
  }
  return s.prefactor * total;
}

double adaptive_box(const WhitenedSlice& s, double radius, double& error_estimate) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr unsigned kMaxDepth = 15;
  constexpr double kTol = 1e-12;
  Eigen::VectorXd z(s.dims);
  double worst = 0.0;
  std::function<double(int)> level = [&](int k) -> double {
    auto f = [&](double t) {
      z(k) = t;
      const double g = std::exp(-t * t);
      if (k + 1 == s.dims) return g * (s.poly ? (*s.poly)(z) : 1.0);
      return g * level(k + 1);
    };
    double err = 0.0;
    const double v = gauss_kronrod<double, 31>::integrate(f, -radius, radius, kMaxDepth, kTol, &err);
    worst = std::max(worst, err);
    return v;
  };
  const double inner = level(0);
  error_estimate = worst * std::abs(s.prefactor);
  return s.prefactor * inner;
}

}  // namespace

GaussHermiteRule gauss_hermite_rule(int order) {
  if (order < 1) throw InvalidArgument("Gauss-Hermite order must be positive");
  // Jacobi matrix: zero diagonal, off-diagonal sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 5; ++it) {
      const HermiteValues h = hermite_orthonormal(order, x);
      const double step = h.pn / (std::sqrt(2.0 * order) * h.pn1);
      x -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / hermite_orthonormal(order, x).christoffel;
  }
  return rule;
}

double wigner_slice_integral(const WignerSpec& w, const Eigen::MatrixXd& l, const QuadratureConfig& q) {
  const WhitenedSlice s = whiten(w, l);
  if (q.scheme == QuadratureScheme::GaussHermite) {
    if (q.order < 8) throw InvalidArgument("quadrature order must be at least 8");
    const double coarse = tensor_gauss_hermite(s, gauss_hermite_rule(q.order));
    const double fine = tensor_gauss_hermite(s, gauss_hermite_rule(2 * q.order));
    const double scale = std::max(std::abs(fine), s.gaussian_mass);
    if (std::abs(fine - coarse) > kConvergenceTolerance * scale) {
      throw ConvergenceError("Gauss-Hermite order " + std::to_string(q.order) + " vs " +
                             std::to_string(2 * q.order) + " differ by " +
                             std::to_string(std::abs(fine - coarse)));
    }
    return coarse;
  }
  if (!(q.radius > 0.0)) throw InvalidArgument("adaptive quadrature radius must be positive");
  double err = 0.0;
  const double value = adaptive_box(s, q.radius, err);
  const double scale = std::max(std::abs(value), s.gaussian_mass);
  if (err > kConvergenceTolerance * scale) {
    throw ConvergenceError("adaptive quadrature error estimate " + std::to_string(err) +
                           " exceeds tolerance");
  }
  return value;
}

double wigner_slice_integral_moments(const WignerSpec& w, const Eigen::MatrixXd& l) {
  const WhitenedSlice s = whiten(w, l);
  const double gauss = s.prefactor * std::pow(std::numbers::pi, 0.5 * s.dims);
  if (!s.poly) return gauss;
  // z has density exp(-|z|^2)/pi^{d/2}, i.e. covariance I/2.
  const Eigen::MatrixXd cov = 0.5 * Eigen::MatrixXd::Identity(s.dims, s.dims);
  return gauss * s.poly->gaussian_expectation(cov);
}

}  // namespace cvent
