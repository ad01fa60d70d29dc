#include "cvent/gaussian_model.hpp"

#include "cvent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cvent {

namespace {

void require_nonnegative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidArgument(std::string(name) + " must be a finite nonnegative number");
  }
}

Eigen::Matrix4d two_two_coupling() {
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
  r(0, 0) = 1.0;
  r(1, 3) = -1.0;
  r(2, 2) = -1.0;
  r(3, 1) = -1.0;
  return r;
}

}  // namespace

TwoModeStandardForm TwoModeStandardForm::make(double a, double b, double c1, double c2) {
  for (double x : {a, b, c1, c2}) {
    if (!std::isfinite(x)) throw InvalidArgument("standard form parameters must be finite");
  }
  if (a < kVacuumVariance) throw InvalidArgument("standard form violates a >= 1/4");
  if (b < kVacuumVariance) throw InvalidArgument("standard form violates b >= 1/4");
  if (a * b < c1 * c1) throw InvalidArgument("standard form violates ab >= c1^2");
  if (a * b < c2 * c2) throw InvalidArgument("standard form violates ab >= c2^2");
  TwoModeStandardForm s{a, b, c1, c2};
  if (!is_physical(s.covariance())) {
    throw InvalidArgument("standard form violates the uncertainty relation V + iJ/4 >= 0");
  }
  return s;
}

CovarianceMatrix TwoModeStandardForm::covariance() const {
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v(0, 0) = v(1, 1) = a;
  v(2, 2) = v(3, 3) = b;
  v(0, 2) = v(2, 0) = c1;
  v(1, 3) = v(3, 1) = c2;
  return CovarianceMatrix(v);
}

double WignerSpec::operator()(const Eigen::VectorXd& xi) const {
  const Eigen::MatrixXd& v = gaussian_covariance.matrix();
  const int dim = gaussian_covariance.dimension();
  if (xi.size() != dim) throw InvalidArgument("Wigner evaluation point has wrong dimension");
  Eigen::LDLT<Eigen::MatrixXd> ldlt(v);
  const Eigen::VectorXd d = mean.size() == dim ? Eigen::VectorXd(xi - mean) : xi;
  const double quad = d.dot(ldlt.solve(d));
  const double norm = std::pow(2.0 * std::numbers::pi, -modes()) / std::sqrt(v.determinant());
  const double poly = poly_prefactor ? (*poly_prefactor)(xi) : 1.0;
  return norm_prefactor * poly * norm * std::exp(-0.5 * quad);
}

CovarianceMatrix standard_two_mode(double a, double b, double c1, double c2) {
  return TwoModeStandardForm::make(a, b, c1, c2).covariance();
}

TwoModeStandardForm squeezed_thermal_params(double n, double r) {
  require_nonnegative(n, "mean photon number n");
  require_nonnegative(r, "squeezing r");
  const double q = 1.0 + 2.0 * n;
  const double diag = q * std::cosh(2.0 * r) / 4.0;
  const double corr = q * std::sinh(2.0 * r) / 4.0;
  return TwoModeStandardForm{diag, diag, corr, -corr};
}

CovarianceMatrix two_two_family(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidArgument("two_two_family parameters must be finite");
  }
  if (a < kVacuumVariance || b < kVacuumVariance) {
    throw InvalidArgument("two_two_family requires a, b >= 1/4");
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(8, 8);
  v.topLeftCorner(4, 4) = a * Eigen::Matrix4d::Identity();
  v.bottomRightCorner(4, 4) = b * Eigen::Matrix4d::Identity();
  const Eigen::Matrix4d r = two_two_coupling();
  v.topRightCorner(4, 4) = c * r;
  v.bottomLeftCorner(4, 4) = c * r.transpose();
  return CovarianceMatrix(v);
}

double family_threshold(double a, double b) {
  if (a < kVacuumVariance || b < kVacuumVariance) {
    throw InvalidArgument("family_threshold requires a, b >= 1/4");
  }
  const double inner = a * a + b * b - 1.0 / 16.0;
  const double radicand = a * b - std::sqrt(inner) / 4.0;
  // (16a^2 - 1)(16b^2 - 1) >= 0 makes the radicand nonnegative up to rounding
  return std::sqrt(std::max(radicand, 0.0));
}

WignerSpec photon_added_sts_wigner(double n, double r) {
  const TwoModeStandardForm core = squeezed_thermal_params(n, r);
  const double q = 1.0 + 2.0 * n;
  const double ch = std::cosh(2.0 * r);
  const double sh = std::sinh(2.0 * r);
  const double cosh_r = std::cosh(r);
  // u = (1 + 2n + cosh2r) x2 - sinh2r x1,  v = (1 + 2n + cosh2r) p2 + sinh2r p1
  const Polynomial u = Polynomial::linear(Eigen::Vector4d(-sh, 0.0, q + ch, 0.0));
  const Polynomial v = Polynomial::linear(Eigen::Vector4d(0.0, sh, 0.0, q + ch));
  Polynomial bracket = u * u + v * v;
  bracket += Polynomial::constant(4, -q * (n + cosh_r * cosh_r));

  WignerSpec spec{core.covariance(), Eigen::VectorXd::Zero(4), std::move(bracket), 1.0};
  spec.norm_prefactor = 1.0 / (q * q * (cosh_r * cosh_r + n * ch));
  return spec;
}

WignerSpec gaussian_wigner(const CovarianceMatrix& v) {
  return WignerSpec{v, Eigen::VectorXd::Zero(v.dimension()), std::nullopt, 1.0};
}

double wigner_total_mass(const WignerSpec& w) {
  if (w.mean.size() != 0 && !w.mean.isZero(0.0)) {
    throw InvalidArgument("wigner_total_mass: only zero-mean Wigner functions are supported");
  }
  const double moment =
      w.poly_prefactor ? w.poly_prefactor->gaussian_expectation(w.gaussian_covariance.matrix()) : 1.0;
  return w.norm_prefactor * moment;
}

}  // namespace cvent
