#pragma once

// Independent reference computations used only by tests. Nothing here calls into
// the engines it is used to check, except where a helper is explicitly a driver
// (threshold bisection drives is_physical).

#include "cvent/gaussian_model.hpp"
#include "cvent/symplectic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

namespace oracle {

using Eigen::MatrixXd;

// Squeezed thermal Wigner function written out directly, vacuum variance 1/4.
inline double w_sts(double n, double r, double x1, double p1, double x2, double p2) {
  const double q = 1.0 + 2.0 * n;
  const double e = -2.0 * (x1 * x1 + p1 * p1 + x2 * x2 + p2 * p2) * std::cosh(2.0 * r) / q +
                   4.0 * (x1 * x2 - p1 * p2) * std::sinh(2.0 * r) / q;
  return 4.0 / (q * q * std::numbers::pi * std::numbers::pi) * std::exp(e);
}

// Photon-added squeezed thermal Wigner function, written out term by term.
inline double w_photon_added(double n, double r, double x1, double p1, double x2, double p2) {
  const double ch = std::cosh(2.0 * r), sh = std::sinh(2.0 * r), c2 = std::cosh(r) * std::cosh(r);
  const double u = x2 + 2.0 * n * x2 + x2 * ch - x1 * sh;
  const double v = p2 + 2.0 * n * p2 + p2 * ch + p1 * sh;
  const double bracket = u * u + v * v - (1.0 + 2.0 * n) * (n + c2);
  return w_sts(n, r, x1, p1, x2, p2) * bracket / ((1.0 + 2.0 * n) * (1.0 + 2.0 * n) * (c2 + n * ch));
}

inline double witness_photon_added(double n, double r) {
  const double c2 = std::cosh(r) * std::cosh(r);
  return 1.0 - std::exp(4.0 * r) * n * (1.0 + n) / ((1.0 + 2.0 * n) * (1.0 + 2.0 * n) * (c2 + n * std::cosh(2.0 * r)));
}

// Gaussian witness expectation from the factorized x and p line integrals of a
// standard-form Wigner function along (-mu_minus x, -mu_plus p, x, p).
inline double witness_gaussian_lines(double a, double b, double c1, double c2, double mu1, double mu2) {
  const double mm = mu1 - mu2, mp = mu1 + mu2;
  const double f1 = b * mm * mm + 2.0 * c1 * mm + a;
  const double f2 = b * mp * mp + 2.0 * c2 * mp + a;
  return 1.0 - std::sqrt(std::abs(mm * mp)) / (2.0 * std::sqrt(f1 * f2));
}

inline double optimal_witness_closed(double a, double b, double c1, double c2) {
  const double s = std::sqrt(a * b);
  return 1.0 - 1.0 / (4.0 * std::sqrt((s - std::abs(c1)) * (s - std::abs(c2))));
}

// Printed Gram covariances of R R^dag.
inline MatrixXd reference_gram_two_mode(double a, double b, double c1, double c2) {
  auto diag = [&](double c) { const double d = a * b - c * c; return (b + 16.0 * a * d) / (32.0 * d); };
  auto off = [&](double c) { const double d = a * b - c * c; return (b - 16.0 * a * d) / (32.0 * d); };
  MatrixXd g = MatrixXd::Zero(4, 4);
  g(0, 0) = g(2, 2) = diag(c2);
  g(1, 1) = g(3, 3) = diag(c1);
  g(0, 2) = g(2, 0) = -off(c2);
  g(1, 3) = g(3, 1) = off(c1);
  return g;
}

inline MatrixXd reference_gram_two_two(double a, double b, double c) {
  const double d = a * b - c * c;
  const double p = (b + 16.0 * a * d) / (32.0 * d);
  const double q = (b - 16.0 * a * d) / (32.0 * d);
  MatrixXd g = p * MatrixXd::Identity(8, 8);
  for (int i = 0; i < 4; ++i) {
    const double s = i % 2 == 0 ? -q : q;
    g(i, i + 4) = g(i + 4, i) = s;
  }
  return g;
}

// Symplectic building blocks on m modes, quadrature order (x1, p1, ..., xm, pm).
inline MatrixXd single_mode_squeezer(int m, int mode, double s) {
  MatrixXd out = MatrixXd::Identity(2 * m, 2 * m);
  out(2 * mode, 2 * mode) = std::exp(-s);
  out(2 * mode + 1, 2 * mode + 1) = std::exp(s);
  return out;
}

inline MatrixXd phase_rotation(int m, int mode, double theta) {
  MatrixXd out = MatrixXd::Identity(2 * m, 2 * m);
  const double c = std::cos(theta), s = std::sin(theta);
  out(2 * mode, 2 * mode) = c;
  out(2 * mode, 2 * mode + 1) = s;
  out(2 * mode + 1, 2 * mode) = -s;
  out(2 * mode + 1, 2 * mode + 1) = c;
  return out;
}

inline MatrixXd beam_splitter(int m, int i, int j, double theta) {
  MatrixXd out = MatrixXd::Identity(2 * m, 2 * m);
  const double c = std::cos(theta), s = std::sin(theta);
  for (int q = 0; q < 2; ++q) {
    out(2 * i + q, 2 * i + q) = c;
    out(2 * i + q, 2 * j + q) = s;
    out(2 * j + q, 2 * i + q) = -s;
    out(2 * j + q, 2 * j + q) = c;
  }
  return out;
}

inline MatrixXd random_symplectic(int m, std::mt19937_64& rng, double max_squeeze = 0.8) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
  MatrixXd s = MatrixXd::Identity(2 * m, 2 * m);
  for (int layer = 0; layer < 3; ++layer) {
    for (int k = 0; k < m; ++k) s = phase_rotation(m, k, angle(rng)) * s;
    for (int k = 0; k < m; ++k) s = single_mode_squeezer(m, k, squeeze(rng)) * s;
    for (int i = 0; i + 1 < m; ++i) s = beam_splitter(m, i, i + 1, angle(rng)) * s;
  }
  return s;
}

// Block-diagonal local symplectic acting on modes [0, n) and [n, 2n) separately.
inline MatrixXd random_local_symplectic(int n, std::mt19937_64& rng) {
  MatrixXd s = MatrixXd::Zero(4 * n, 4 * n);
  s.topLeftCorner(2 * n, 2 * n) = random_symplectic(n, rng);
  s.bottomRightCorner(2 * n, 2 * n) = random_symplectic(n, rng);
  return s;
}

inline MatrixXd random_thermal(int m, std::mt19937_64& rng, double max_extra = 1.0) {
  std::uniform_real_distribution<double> extra(0.0, max_extra);
  MatrixXd d = MatrixXd::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = 0.25 + extra(rng);
  return d;
}

inline MatrixXd random_physical_covariance(int m, std::mt19937_64& rng) {
  const MatrixXd s = random_symplectic(m, rng);
  return s * random_thermal(m, rng) * s.transpose();
}

inline MatrixXd random_product_covariance(std::mt19937_64& rng) {
  MatrixXd v = MatrixXd::Zero(4, 4);
  v.topLeftCorner(2, 2) = random_physical_covariance(1, rng);
  v.bottomRightCorner(2, 2) = random_physical_covariance(1, rng);
  return v;
}

struct StandardForm {
  double a, b, c1, c2;
};

// Rejection sampling of physical standard forms with sqrt(ab) > |c_i| strictly.
inline StandardForm random_standard_form(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> diag(0.25, 2.5);
  std::uniform_real_distribution<double> unit(-0.999, 0.999);
  for (;;) {
    const double a = diag(rng), b = diag(rng);
    const double s = std::sqrt(a * b);
    const double c1 = s * unit(rng), c2 = s * unit(rng);
    Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
    v(0, 0) = v(1, 1) = a;
    v(2, 2) = v(3, 3) = b;
    v(0, 2) = v(2, 0) = c1;
    v(1, 3) = v(3, 1) = c2;
    if (cvent::is_physical(cvent::CovarianceMatrix(v))) return {a, b, c1, c2};
  }
}

// Largest physical |c| of the 2+2 family found by bisecting the uncertainty test.
inline double threshold_by_bisection(double a, double b) {
  double lo = 0.0, hi = std::sqrt(a * b);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cvent::is_physical(cvent::two_two_family(a, b, mid)) ? lo : hi) = mid;
  }
  return lo;
}

// (sum_k sqrt(mu_k))^2 for TMSV Schmidt weights mu_k = tanh^{2k} r / cosh^2 r.
inline double tmsv_schmidt_sum_squared(double r, int terms = 4000) {
  double s = 0.0;
  const double t = std::tanh(r);
  double w = 1.0 / std::cosh(r);
  for (int k = 0; k < terms; ++k, w *= t) s += w;
  return s * s;
}

inline double binary_entropy_direct(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x) / std::log(2.0) - (1.0 - x) * std::log(1.0 - x) / std::log(2.0);
}

// Simple composite Simpson rule on a 4D box; slow but independent of the library rules.
template <typename F>
double simpson_4d(F&& f, double half_width, int panels) {
  const double h = 2.0 * half_width / panels;
  auto weight = [&](int k) { return (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0); };
  double total = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double x1 = -half_width + i * h;
    for (int j = 0; j <= panels; ++j) {
      const double p1 = -half_width + j * h;
      for (int k = 0; k <= panels; ++k) {
        const double x2 = -half_width + k * h;
        for (int l = 0; l <= panels; ++l) {
          const double p2 = -half_width + l * h;
          total += weight(i) * weight(j) * weight(k) * weight(l) * f(x1, p1, x2, p2);
        }
      }
    }
  }
  return total * std::pow(h / 3.0, 4);
}

}  // namespace oracle
