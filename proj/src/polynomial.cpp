#include "cvent/polynomial.hpp"

#include "cvent/errors.hpp"

#include <cmath>
#include <numeric>

namespace cvent {

namespace {

// Sum over perfect matchings of the index list; `used` marks consumed slots.
double isserlis(const std::vector<int>& idx, std::vector<bool>& used, const Eigen::MatrixXd& cov) {
  int first = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!used[i]) {
      first = static_cast<int>(i);
      break;
    }
  }
  if (first < 0) return 1.0;
  used[first] = true;
  double total = 0.0;
  for (std::size_t j = first + 1; j < idx.size(); ++j) {
    if (used[j]) continue;
    const double c = cov(idx[first], idx[j]);
    if (c != 0.0) {
      used[j] = true;
      total += c * isserlis(idx, used, cov);
      used[j] = false;
    }
  }
  used[first] = false;
  return total;
}

}  // namespace

Polynomial Polynomial::constant(int variables, double value) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0u), value);
  return p;
}

Polynomial Polynomial::linear(const Eigen::VectorXd& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0u);
    e[i] = 1;
    p.add_term(e, coeffs(i));
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [exps, c] : terms_) {
    d = std::max(d, static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u)));
  }
  return d;
}

void Polynomial::add_term(const Exponents& exps, double coeff) {
  if (static_cast<int>(exps.size()) != variables_) {
    throw InvalidArgument("polynomial term has wrong number of exponents");
  }
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::operator()(const Eigen::VectorXd& z) const {
  double total = 0.0;
  for (const auto& [exps, c] : terms_) {
    double t = c;
    for (int i = 0; i < variables_; ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) t *= z(i);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::compose_linear(const Eigen::MatrixXd& l) const {
  if (l.rows() != variables_) throw InvalidArgument("compose_linear: dimension mismatch");
  const int out_vars = static_cast<int>(l.cols());
  Polynomial result(out_vars);
  std::vector<Polynomial> images;
  images.reserve(variables_);
  for (int i = 0; i < variables_; ++i) images.push_back(linear(l.row(i).transpose()));
  for (const auto& [exps, c] : terms_) {
    Polynomial term = constant(out_vars, c);
    for (int i = 0; i < variables_; ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) term = term * images[i];
    }
    result += term;
  }
  return result;
}

double Polynomial::gaussian_expectation(const Eigen::MatrixXd& cov) const {
  if (cov.rows() != variables_ || cov.cols() != variables_) {
    throw InvalidArgument("gaussian_expectation: covariance dimension mismatch");
  }
  double total = 0.0;
  for (const auto& [exps, c] : terms_) {
    std::vector<int> idx;
    for (int i = 0; i < variables_; ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) idx.push_back(i);
    }
    if (idx.size() % 2 != 0) continue;
    std::vector<bool> used(idx.size(), false);
    total += c * isserlis(idx, used, cov);
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.variables_ != variables_) throw InvalidArgument("polynomial variable count mismatch");
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw InvalidArgument("polynomial variable count mismatch");
  Polynomial out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace cvent
