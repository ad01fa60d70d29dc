#pragma once

// Brute-force two-mode Fock-space oracle. Basis |i>_A |j>_B with 0 <= i, j <= cutoff
// is flattened as index i * (cutoff + 1) + j.

#include <Eigen/Dense>

#include <complex>
#include <filesystem>

namespace cvent {

inline constexpr double kMaxTraceDeficit = 0.01;

struct FockDensityMatrix {
  int cutoff = 0;
  Eigen::MatrixXcd entries;
  /// Lost probability relative to nominal_trace, measured before renormalization.
  double trace_deficit = 0.0;
  /// Trace of the operator being modelled: 1 for states. The literal coherent
  /// mixture is subnormalized, see coherent_mixture_fock.
  double nominal_trace = 1.0;

  [[nodiscard]] int levels() const { return cutoff + 1; }
  [[nodiscard]] int dimension() const { return levels() * levels(); }
  [[nodiscard]] int index(int i, int j) const { return i * levels() + j; }
  [[nodiscard]] std::complex<double> trace() const { return entries.trace(); }
};

enum class FockObservable { W01, Swap };

/// sum_k tanh^k(r)/cosh(r) |kk>, truncated at cutoff.
[[nodiscard]] FockDensityMatrix tmsv_fock(double r, int cutoff);

/// Two-mode squeezing exp(r(a^dag b^dag - ab)) applied to a thermal pair of mean photon number n.
[[nodiscard]] FockDensityMatrix squeezed_thermal_fock(double n, double r, int cutoff);

/// b^dag rho_STS b, renormalized.
[[nodiscard]] FockDensityMatrix photon_added_sts_fock(double n, double r, int cutoff);

/// delta = p|phi><phi| + (1-p)|00><00| with |phi> = (|a1>|a2> - |a2>|a1>)/sqrt(2) taken
/// literally, so Tr(delta) = 1 - p exp(-|a1 - a2|^2). The truncated |phi> is rescaled
/// to its exact norm 1 - |<a1|a2>|^2.
[[nodiscard]] FockDensityMatrix coherent_mixture_fock(double p, std::complex<double> alpha1,
                                                      std::complex<double> alpha2, int cutoff);

/// sum_ij |ii><jj| / (cutoff + 1)
[[nodiscard]] FockDensityMatrix maximally_correlated_fock(int cutoff);

/// Tr(rho W01) with W01 = 1 - sum_ij |ii><jj|, or Tr(rho V) with V = sum_ij |ij><ji|.
[[nodiscard]] double witness_fock(const FockDensityMatrix& rho, FockObservable which);

/// Sum of singular values of the reshuffled matrix R_{(i,k),(j,l)} = rho_{(i,j),(k,l)}.
[[nodiscard]] double realignment_trace_norm_fock(const FockDensityMatrix& rho);

/// ||rho^{T_B}||_1 - Tr(rho).
[[nodiscard]] double negativity_fock(const FockDensityMatrix& rho);

[[nodiscard]] double purity_fock(const FockDensityMatrix& rho);

/// Quadrature covariance (x1, p1, x2, p2), vacuum variance 1/4, of the normalized state.
[[nodiscard]] Eigen::Matrix4d fock_covariance(const FockDensityMatrix& rho);

/// Trace norm via connected blocks of the nonzero pattern; exact zeros split the SVD.
[[nodiscard]] double trace_norm_blocked(const Eigen::MatrixXcd& m);

/// Binary dump: magic "CVFOCK1\0", uint32 cutoff, uint64 rows, uint64 cols, then
/// row-major complex128 (re, im) pairs, little-endian.
void write_fock_dump(const std::filesystem::path& path, const FockDensityMatrix& rho);
[[nodiscard]] FockDensityMatrix read_fock_dump(const std::filesystem::path& path);

}  // namespace cvent
