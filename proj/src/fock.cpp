#include "cvent/fock.hpp"

#include "cvent/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvent {

namespace {

constexpr int kMaxCutoff = 64;
constexpr char kDumpMagic[8] = {'C', 'V', 'F', 'O', 'C', 'K', '1', '\0'};

void require_cutoff(int cutoff, int minimum = 1) {
  if (cutoff < minimum || cutoff > kMaxCutoff) {
    throw InvalidArgument("Fock cutoff must lie in [" + std::to_string(minimum) + ", " +
                          std::to_string(kMaxCutoff) + "], got " + std::to_string(cutoff));
  }
}

void check_deficit(double deficit, const std::string& what) {
  if (deficit > kMaxTraceDeficit) {
    throw TruncationError(what + ": truncation lost " + std::to_string(100.0 * deficit) +
                          "% of the trace (limit 1%); raise the cutoff");
  }
}

double thermal_weight(double n, int m) {
  if (n == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(m * std::log(n) - (m + 1) * std::log1p(n));
}

// Squeezed thermal state on levels 0..last per mode, real entries.
Eigen::MatrixXd squeezed_thermal_real(double n, double r, int last) {
  const int levels = last + 1;
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(levels * levels, levels * levels);
  const int margin = 60 + static_cast<int>(std::ceil(40.0 * r));
  for (int d = -last; d <= last; ++d) {
    const int ad = std::abs(d);
    const int inside = levels - ad;
    const int size = inside + margin;
    Eigen::VectorXd w(size);
    for (int k = 0; k < size; ++k) w(k) = thermal_weight(n, k + ad) * thermal_weight(n, k);
    if (w.maxCoeff() < 1e-300) continue;
    // a^dag b^dag maps |k+|d|, k> (or |k, k+|d|>) to the next sector state
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    for (int k = 0; k + 1 < size; ++k) {
      const double v = std::sqrt(static_cast<double>(k + ad + 1) * (k + 1));
      gen(k + 1, k) = v;
      gen(k, k + 1) = -v;
    }
    const Eigen::MatrixXd s = (r * gen).exp();
    const Eigen::MatrixXd top = s.topRows(inside);
    const Eigen::MatrixXd blk = top * w.asDiagonal() * top.transpose();
    std::vector<int> idx(inside);
    for (int k = 0; k < inside; ++k) idx[k] = d >= 0 ? (k + ad) * levels + k : k * levels + (k + ad);
    for (int i = 0; i < inside; ++i) {
      for (int j = 0; j < inside; ++j) rho(idx[i], idx[j]) = blk(i, j);
    }
  }
  return rho;
}

Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int cutoff) {
  Eigen::VectorXcd c(cutoff + 1);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int k = 1; k <= cutoff; ++k) c(k) = c(k - 1) * alpha / std::sqrt(static_cast<double>(k));
  return c;
}

FockDensityMatrix from_pure(const Eigen::VectorXcd& psi, int cutoff, double deficit) {
  FockDensityMatrix out;
  out.cutoff = cutoff;
  out.entries = psi * psi.adjoint();
  out.trace_deficit = deficit;
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <typename Matrix>
double singular_value_sum(const Matrix& block) {
  if (block.rows() <= 16 && block.cols() <= 16) {
    return Eigen::JacobiSVD<Matrix>(block).singularValues().sum();
  }
  return Eigen::BDCSVD<Matrix>(block).singularValues().sum();
}

// Applies a product of ladder operators (written left to right, applied right to left)
// to |i, j>; returns false when the result leaves the truncated space or vanishes.
struct Ladder {
  int mode;  // 0 = A, 1 = B
  bool dagger;
};

bool apply_ladders(std::span<const Ladder> ops, int cutoff, std::array<int, 2>& ket, double& amp) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    int& level = ket[it->mode];
    if (it->dagger) {
      if (level + 1 > cutoff) return false;
      amp *= std::sqrt(static_cast<double>(level + 1));
      ++level;
    } else {
      if (level == 0) return false;
      amp *= std::sqrt(static_cast<double>(level));
      --level;
    }
  }
  return true;
}

std::complex<double> expectation(const FockDensityMatrix& rho, std::span<const Ladder> ops) {
  std::complex<double> total = 0.0;
  const int levels = rho.levels();
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      std::array<int, 2> ket{i, j};
      double amp = 1.0;
      if (!apply_ladders(ops, rho.cutoff, ket, amp)) continue;
      total += rho.entries(rho.index(i, j), rho.index(ket[0], ket[1])) * amp;
    }
  }
  return total;
}

}  // namespace

FockDensityMatrix tmsv_fock(double r, int cutoff) {
  require_cutoff(cutoff, 4);
  if (!(r >= 0.0)) throw InvalidArgument("tmsv_fock: r must be nonnegative");
  const int levels = cutoff + 1;
  const double t = std::tanh(r);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(levels * levels);
  double coeff = 1.0 / std::cosh(r);
  for (int k = 0; k < levels; ++k) {
    psi(k * levels + k) = coeff;
    coeff *= t;
  }
  const double kept = psi.squaredNorm();
  const double deficit = 1.0 - kept;
  check_deficit(deficit, "tmsv_fock");
  psi /= std::sqrt(kept);
  return from_pure(psi, cutoff, std::max(deficit, 0.0));
}

FockDensityMatrix squeezed_thermal_fock(double n, double r, int cutoff) {
  require_cutoff(cutoff);
  if (!(n >= 0.0) || !(r >= 0.0)) throw InvalidArgument("squeezed_thermal_fock: n and r must be nonnegative");
  Eigen::MatrixXd rho = squeezed_thermal_real(n, r, cutoff);
  const double kept = rho.trace();
  const double deficit = 1.0 - kept;
  check_deficit(deficit, "squeezed_thermal_fock");
  FockDensityMatrix out;
  out.cutoff = cutoff;
  out.entries = (rho / kept).cast<std::complex<double>>();
  out.trace_deficit = std::max(deficit, 0.0);
  return out;
}

FockDensityMatrix photon_added_sts_fock(double n, double r, int cutoff) {
  require_cutoff(cutoff);
  if (!(n >= 0.0) || !(r >= 0.0)) throw InvalidArgument("photon_added_sts_fock: n and r must be nonnegative");
  const Eigen::MatrixXd base = squeezed_thermal_real(n, r, cutoff);
  const int levels = cutoff + 1;
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(levels * levels, levels * levels);
  // (b^dag rho b)_{(i,j),(k,l)} = sqrt(j l) rho_{(i,j-1),(k,l-1)}
  for (int i = 0; i < levels; ++i) {
    for (int j = 1; j < levels; ++j) {
      for (int k = 0; k < levels; ++k) {
        for (int l = 1; l < levels; ++l) {
          const double v = base(i * levels + j - 1, k * levels + l - 1);
          if (v != 0.0) rho(i * levels + j, k * levels + l) = std::sqrt(static_cast<double>(j) * l) * v;
        }
      }
    }
  }
  // Tr(b^dag rho b) = <n_b> + 1 with <n_b> = 2 * variance - 1/2
  const double exact = (1.0 + 2.0 * n) * std::cosh(2.0 * r) / 2.0 + 0.5;
  const double kept = rho.trace();
  const double deficit = 1.0 - kept / exact;
  check_deficit(deficit, "photon_added_sts_fock");
  FockDensityMatrix out;
  out.cutoff = cutoff;
  out.entries = (rho / kept).cast<std::complex<double>>();
  out.trace_deficit = std::max(deficit, 0.0);
  return out;
}

FockDensityMatrix coherent_mixture_fock(double p, std::complex<double> alpha1, std::complex<double> alpha2,
                                        int cutoff) {
  require_cutoff(cutoff);
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("coherent_mixture_fock: p must lie in [0, 1]");
  const int levels = cutoff + 1;
  const double exact_norm2 = 1.0 - std::exp(-std::norm(alpha1 - alpha2));
  if (p > 0.0 && exact_norm2 <= 0.0) {
    throw InvalidArgument("coherent_mixture_fock: alpha1 == alpha2 makes the antisymmetric state vanish");
  }
  FockDensityMatrix out;
  out.cutoff = cutoff;
  out.entries = Eigen::MatrixXcd::Zero(levels * levels, levels * levels);
  out.entries(0, 0) = 1.0 - p;
  out.nominal_trace = 1.0 - p * (1.0 - exact_norm2);
  if (p == 0.0) return out;

  const Eigen::VectorXcd c1 = coherent_amplitudes(alpha1, cutoff);
  const Eigen::VectorXcd c2 = coherent_amplitudes(alpha2, cutoff);
  Eigen::VectorXcd phi(levels * levels);
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) phi(i * levels + j) = (c1(i) * c2(j) - c2(i) * c1(j)) / std::sqrt(2.0);
  }
  const double kept = phi.squaredNorm();
  const double deficit = 1.0 - kept / exact_norm2;
  check_deficit(deficit, "coherent_mixture_fock");
  phi *= std::sqrt(exact_norm2 / kept);
  out.entries += p * phi * phi.adjoint();
  out.trace_deficit = std::max(deficit, 0.0);
  return out;
}

FockDensityMatrix maximally_correlated_fock(int cutoff) {
  require_cutoff(cutoff);
  const int levels = cutoff + 1;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(levels * levels);
  for (int k = 0; k < levels; ++k) psi(k * levels + k) = 1.0 / std::sqrt(static_cast<double>(levels));
  return from_pure(psi, cutoff, 0.0);
}

double witness_fock(const FockDensityMatrix& rho, FockObservable which) {
  const int levels = rho.levels();
  std::complex<double> total = 0.0;
  if (which == FockObservable::W01) {
    std::complex<double> overlap = 0.0;
    for (int i = 0; i < levels; ++i) {
      for (int j = 0; j < levels; ++j) overlap += rho.entries(rho.index(j, j), rho.index(i, i));
    }
    total = rho.trace() - overlap;
  } else {
    for (int i = 0; i < levels; ++i) {
      for (int j = 0; j < levels; ++j) total += rho.entries(rho.index(j, i), rho.index(i, j));
    }
  }
  return total.real();
}

double trace_norm_blocked(const Eigen::MatrixXcd& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  UnionFind uf(rows + cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      if (m(i, j) != std::complex<double>(0.0)) uf.unite(i, rows + j);
    }
  }
  std::vector<std::vector<int>> block_rows(rows + cols), block_cols(rows + cols);
  for (int i = 0; i < rows; ++i) block_rows[uf.find(i)].push_back(i);
  for (int j = 0; j < cols; ++j) block_cols[uf.find(rows + j)].push_back(j);

  double total = 0.0;
  for (int root = 0; root < rows + cols; ++root) {
    const auto& br = block_rows[root];
    const auto& bc = block_cols[root];
    if (br.empty() || bc.empty()) continue;
    Eigen::MatrixXcd block(br.size(), bc.size());
    for (std::size_t a = 0; a < br.size(); ++a) {
      for (std::size_t b = 0; b < bc.size(); ++b) block(a, b) = m(br[a], bc[b]);
    }
    if (block.imag().isZero(0.0)) {
      total += singular_value_sum<Eigen::MatrixXd>(block.real());
    } else {
      total += singular_value_sum<Eigen::MatrixXcd>(block);
    }
  }
  return total;
}

double realignment_trace_norm_fock(const FockDensityMatrix& rho) {
  const int levels = rho.levels();
  Eigen::MatrixXcd reshuffled(rho.dimension(), rho.dimension());
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      for (int k = 0; k < levels; ++k) {
        for (int l = 0; l < levels; ++l) {
          reshuffled(i * levels + k, j * levels + l) = rho.entries(rho.index(i, j), rho.index(k, l));
        }
      }
    }
  }
  return trace_norm_blocked(reshuffled);
}

double negativity_fock(const FockDensityMatrix& rho) {
  const int levels = rho.levels();
  Eigen::MatrixXcd pt(rho.dimension(), rho.dimension());
  for (int i = 0; i < levels; ++i) {
    for (int j = 0; j < levels; ++j) {
      for (int k = 0; k < levels; ++k) {
        for (int l = 0; l < levels; ++l) {
          pt(rho.index(i, j), rho.index(k, l)) = rho.entries(rho.index(i, l), rho.index(k, j));
        }
      }
    }
  }
  return trace_norm_blocked(pt) - rho.trace().real();
}

double purity_fock(const FockDensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ab|^2 for Hermitian rho
  return rho.entries.cwiseAbs2().sum();
}

Eigen::Matrix4d fock_covariance(const FockDensityMatrix& rho) {
  // ladder order (a, a^dag, b, b^dag)
  const std::array<Ladder, 4> ladders{{{0, false}, {0, true}, {1, false}, {1, true}}};
  const std::complex<double> tr = rho.trace();
  std::array<std::complex<double>, 4> first{};
  Eigen::Matrix4cd second;
  for (int k = 0; k < 4; ++k) {
    first[k] = expectation(rho, std::span(&ladders[k], 1)) / tr;
    for (int l = 0; l < 4; ++l) {
      const std::array<Ladder, 2> pair{ladders[k], ladders[l]};
      second(k, l) = expectation(rho, pair) / tr;
    }
  }
  using namespace std::complex_literals;
  Eigen::Matrix4cd coeff = Eigen::Matrix4cd::Zero();
  for (int mode = 0; mode < 2; ++mode) {
    coeff(2 * mode, 2 * mode) = 0.5;
    coeff(2 * mode, 2 * mode + 1) = 0.5;
    coeff(2 * mode + 1, 2 * mode) = -0.5i;
    coeff(2 * mode + 1, 2 * mode + 1) = 0.5i;
  }
  const Eigen::Vector4cd mean = coeff * Eigen::Vector4cd(first[0], first[1], first[2], first[3]);
  const Eigen::Matrix4cd raw = coeff * second * coeff.transpose();
  Eigen::Matrix4d v;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      v(i, j) = 0.5 * (raw(i, j) + raw(j, i)).real() - (mean(i) * mean(j)).real();
    }
  }
  return v;
}

void write_fock_dump(const std::filesystem::path& path, const FockDensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const auto cutoff = static_cast<std::uint32_t>(rho.cutoff);
  const auto rows = static_cast<std::uint64_t>(rho.entries.rows());
  const auto cols = static_cast<std::uint64_t>(rho.entries.cols());
  out.write(kDumpMagic, sizeof(kDumpMagic));
  out.write(reinterpret_cast<const char*>(&cutoff), sizeof(cutoff));
  out.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
  out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
  for (std::uint64_t i = 0; i < rows; ++i) {
    for (std::uint64_t j = 0; j < cols; ++j) {
      const std::complex<double> z = rho.entries(i, j);
      const double pair[2] = {z.real(), z.imag()};
      out.write(reinterpret_cast<const char*>(pair), sizeof(pair));
    }
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

FockDensityMatrix read_fock_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[8];
  std::uint32_t cutoff = 0;
  std::uint64_t rows = 0, cols = 0;
  in.read(magic, sizeof(magic));
  in.read(reinterpret_cast<char*>(&cutoff), sizeof(cutoff));
  in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
  in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
  if (!in || std::memcmp(magic, kDumpMagic, sizeof(magic)) != 0) {
    throw InvalidArgument(path.string() + " is not a CVFOCK1 dump");
  }
  const std::uint64_t levels = static_cast<std::uint64_t>(cutoff) + 1;
  if (rows != levels * levels || cols != rows) throw InvalidArgument("CVFOCK1 header dimensions inconsistent");
  FockDensityMatrix rho;
  rho.cutoff = static_cast<int>(cutoff);
  rho.entries.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::uint64_t i = 0; i < rows; ++i) {
    for (std::uint64_t j = 0; j < cols; ++j) {
      double pair[2];
      in.read(reinterpret_cast<char*>(pair), sizeof(pair));
      rho.entries(i, j) = {pair[0], pair[1]};
    }
  }
  if (!in) throw InvalidArgument(path.string() + " is truncated");
  rho.nominal_trace = rho.entries.trace().real();
  return rho;
}

}  // namespace cvent
