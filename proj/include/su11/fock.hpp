#pragma once

// Brute-force verification arena: a two-mode Fock space truncated at
// n1, n2 <= n_max. Every su(1,1) generator conserves the difference
// d = n1 - n2, so operators are stored as one dense block per sector.
//
// Basis: global index of |n1, n2> is n1 * (n_max + 1) + n2. Inside sector d the
// local index k runs over k = min(n1, n2) = 0 .. n_max - |d|; the last local
// state of a sector ("top") is the one that touches the truncation edge.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <memory>
#include <vector>

#include "su11/core.hpp"
#include "su11/execution.hpp"

namespace su11::fock {

using Complex = std::complex<double>;

struct SectorSpectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // real orthogonal
};

class FockWorkspace {
 public:
  explicit FockWorkspace(int n_max, Execution execution = Execution::parallel);

  int n_max() const { return n_max_; }
  int dim() const { return (n_max_ + 1) * (n_max_ + 1); }
  int index(int n1, int n2) const { return n1 * (n_max_ + 1) + n2; }

  int min_sector() const { return -n_max_; }
  int max_sector() const { return n_max_; }
  int sector_count() const { return 2 * n_max_ + 1; }
  int sector_size(int d) const { return n_max_ + 1 - (d < 0 ? -d : d); }
  int n1(int d, int k) const { return k + (d > 0 ? d : 0); }
  int n2(int d, int k) const { return k + (d < 0 ? -d : 0); }

  Execution execution() const { return execution_; }

  // Eigendecomposition of the real tridiagonal Kx block of sector d, computed
  // once per workspace. Ky and exp(-i t Ky) are derived from it.
  const SectorSpectrum& kx_spectrum(int d) const { return spectra_->at(d + n_max_); }

 private:
  int n_max_;
  Execution execution_;
  std::shared_ptr<const std::vector<SectorSpectrum>> spectra_;
};

// Dense complex operator over the workspace basis, stored block-diagonally by
// difference sector.
class OperatorMatrix {
 public:
  OperatorMatrix(const FockWorkspace& ws, std::vector<Eigen::MatrixXcd> blocks);

  static OperatorMatrix identity(const FockWorkspace& ws);
  static OperatorMatrix zero(const FockWorkspace& ws);
  // Diagonal operator with entries f(n1, n2).
  template <class F>
  static OperatorMatrix diagonal(const FockWorkspace& ws, F&& f);

  int n_max() const { return n_max_; }
  Execution execution() const { return execution_; }
  const Eigen::MatrixXcd& block(int d) const { return blocks_[d + n_max_]; }
  Eigen::MatrixXcd& block(int d) { return blocks_[d + n_max_]; }
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }

  OperatorMatrix adjoint() const;
  Eigen::MatrixXcd to_dense() const;

  // max |M - M^dagger|
  double hermiticity_defect() const;
  // max |M^dagger M - I|
  double unitarity_defect() const;
  bool hermitian() const { return hermiticity_defect() < 1e-12; }
  bool unitary() const { return unitarity_defect() < 1e-10; }
  bool is_diagonal() const;

  // Largest population pushed onto the truncation edge while this operator was
  // built against a probe state (0 when no probe was given).
  double leakage() const { return leakage_; }
  void set_leakage(double leakage) { leakage_ = leakage; }

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex scale);

 private:
  int n_max_;
  Execution execution_;
  std::vector<Eigen::MatrixXcd> blocks_;
  double leakage_ = 0.0;
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex scale, OperatorMatrix a);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// max |entry| over rows and columns with n1, n2 <= n_max - 1 (the block where
// truncation does not touch products of two ladder-type operators).
double interior_max_abs(const OperatorMatrix& m);
double max_abs(const OperatorMatrix& m);

using SparseOperator = Eigen::SparseMatrix<Complex>;

struct Generators {
  OperatorMatrix kx;
  OperatorMatrix ky;
  OperatorMatrix kz;
  OperatorMatrix n;
  // Ladder operators change the sector, so they live on the full basis.
  SparseOperator a1;
  SparseOperator a2;
};

Generators build_generators(const FockWorkspace& ws);

// Kz^2 - Kx^2 - Ky^2
OperatorMatrix casimir(const Generators& g);

struct TruncationPolicy {
  // 1 - trace of the retained thermal weights before renormalisation.
  double thermal_leakage = 1e-10;
  // Single-mode thermal occupancy of level n_max.
  double edge_occupancy = 1e-12;
  // Population reaching a sector's top level after any squeezing stage.
  double squeeze_leakage = 1e-8;
};

class ThermalState {
 public:
  ThermalState(const FockWorkspace& ws, double beta, double omega, std::vector<Eigen::VectorXd> weights,
               double leakage, double edge_occupancy);

  int n_max() const { return n_max_; }
  double beta() const { return beta_; }
  double omega() const { return omega_; }
  // Closed form [2 sinh(beta omega / 2)]^-2 of the untruncated state.
  double partition_function() const;
  double log_partition_function() const;
  // Weight lost to truncation before renormalisation.
  double leakage() const { return leakage_; }
  double edge_occupancy() const { return edge_occupancy_; }
  double trace() const;

  const Eigen::VectorXd& weights(int d) const { return weights_[d + n_max_]; }
  OperatorMatrix density_matrix(const FockWorkspace& ws) const;

 private:
  int n_max_;
  double beta_;
  double omega_;
  std::vector<Eigen::VectorXd> weights_;
  double leakage_;
  double edge_occupancy_;
};

// rho = exp(-beta omega (N + 1)) / Z, renormalised on the retained block.
// Throws TruncationError when the policy's thermal limits are exceeded.
// beta = +inf gives the vacuum.
ThermalState thermal_state(const FockWorkspace& ws, double beta, double omega,
                           const TruncationPolicy& policy = {});

// exp(-i t Kx), exp(-i t Ky), exp(-i t Kz)
OperatorMatrix exp_kx(const FockWorkspace& ws, double t);
OperatorMatrix exp_ky(const FockWorkspace& ws, double t);
OperatorMatrix exp_kz(const FockWorkspace& ws, double t);
// exp(-i t H) for any Hermitian H, by per-block eigendecomposition.
OperatorMatrix exp_hermitian(const OperatorMatrix& h, double t);

// Optional leakage probe for the unitary builders: every partial product is
// applied to the probe state and the population reaching the truncation edge
// is recorded; above `tolerance` a TruncationError is thrown.
struct LeakageGuard {
  const ThermalState* state = nullptr;
  double tolerance = TruncationPolicy{}.squeeze_leakage;
};

// exp(-i zeta Kx) exp(-i phi Kz) exp(i zeta Kx)
OperatorMatrix unitary_product(const InterferometerAngles& angles, const FockWorkspace& ws,
                               const LeakageGuard& guard = {});
// exp(i theta Kz) exp(i chi Ky) exp(-i theta Kz)
OperatorMatrix unitary_equiv(const ProtocolEndpoints& endpoints, const FockWorkspace& ws,
                             const LeakageGuard& guard = {});
// exp(-i f_z Kz) exp(-i f_y Ky)
OperatorMatrix evolution_endpoint(double f_y, double f_z, const FockWorkspace& ws,
                                  const LeakageGuard& guard = {});

// 2 omega_f [cosh(f_y) Kz - sinh(f_y) Kx]
OperatorMatrix hamiltonian_final(double omega_f, double f_y, const FockWorkspace& ws);

// Population of the sector top levels in U rho U^dagger.
double edge_leakage(const OperatorMatrix& u, const ThermalState& state);

struct Moments {
  double mean;
  double variance;
  // |Im Tr[O rho]| + |Im Tr[O^2 rho]|
  double imag_residue;
};

// Tr[O rho], Tr[O^2 rho] - Tr[O rho]^2. Throws DimensionMismatchError when the
// truncations differ.
Moments moments(const OperatorMatrix& op, const ThermalState& state);
double expect(const OperatorMatrix& op, const ThermalState& state);
double variance(const OperatorMatrix& op, const ThermalState& state);

// Moments of the Heisenberg-picture operator U^dagger O U in rho.
Moments evolved_moments(const OperatorMatrix& u, const OperatorMatrix& op, const ThermalState& state);

template <class F>
OperatorMatrix OperatorMatrix::diagonal(const FockWorkspace& ws, F&& f) {
  std::vector<Eigen::MatrixXcd> blocks(ws.sector_count());
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    const int m = ws.sector_size(d);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 0; k < m; ++k) b(k, k) = f(ws.n1(d, k), ws.n2(d, k));
    blocks[d + ws.n_max()] = std::move(b);
  }
  return OperatorMatrix(ws, std::move(blocks));
}

// Unblocked serial implementation on the full (n_max+1)^2 basis. Slow; kept as
// the reference the sector kernels are tested and benchmarked against.
namespace reference {

struct DenseGenerators {
  Eigen::MatrixXcd a1;
  Eigen::MatrixXcd a2;
  Eigen::MatrixXcd kx;
  Eigen::MatrixXcd ky;
  Eigen::MatrixXcd kz;
  Eigen::MatrixXcd n;
};

DenseGenerators dense_generators(int n_max);
Eigen::MatrixXcd dense_exp(const Eigen::MatrixXcd& h, double t);
Eigen::MatrixXcd dense_unitary_product(const InterferometerAngles& angles, const DenseGenerators& g);
Eigen::MatrixXcd dense_unitary_equiv(const ProtocolEndpoints& endpoints, const DenseGenerators& g);
Eigen::MatrixXcd dense_evolution_endpoint(double f_y, double f_z, const DenseGenerators& g);
Eigen::VectorXd dense_thermal_diagonal(int n_max, double beta, double omega);
// Tr[U^dagger O U rho] for diagonal rho.
double dense_evolved_mean(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& op, const Eigen::VectorXd& rho);

}  // namespace reference

}  // namespace su11::fock
