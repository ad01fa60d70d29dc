#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace cvent {

/// Real polynomial in a fixed number of variables, stored as exponent vector -> coefficient.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(int variables = 0) : variables_(variables) {}

  static Polynomial constant(int variables, double value);
  /// sum_i coeffs[i] * z_i
  static Polynomial linear(const Eigen::VectorXd& coeffs);

  [[nodiscard]] int variables() const { return variables_; }
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponents, double>& terms() const { return terms_; }

  void add_term(const Exponents& exps, double coeff);

  [[nodiscard]] double operator()(const Eigen::VectorXd& z) const;

  /// Substitutes z = L y, returning a polynomial in y (L.cols() variables).
  [[nodiscard]] Polynomial compose_linear(const Eigen::MatrixXd& l) const;

  /// E[p(z)] for z ~ N(0, cov) by Isserlis' theorem.
  [[nodiscard]] double gaussian_expectation(const Eigen::MatrixXd& cov) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }

 private:
  int variables_;
  std::map<Exponents, double> terms_;
};

}  // namespace cvent
