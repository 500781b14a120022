#include "su11/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "su11/csv.hpp"
#include "su11/errors.hpp"

namespace su11::fock {

namespace {

constexpr Complex kI{0.0, 1.0};

bool parallel(Execution e) { return e == Execution::parallel; }

void require_same(int a, int b) {
  if (a != b) {
    throw DimensionMismatchError("operator truncations differ: n_max " + std::to_string(a) + " vs " +
                                 std::to_string(b));
  }
}

// sqrt(n1 n2) of local state k: the a1 a2 matrix element from k to k - 1.
double lowering_element(const FockWorkspace& ws, int d, int k) {
  return std::sqrt(static_cast<double>(ws.n1(d, k)) * static_cast<double>(ws.n2(d, k)));
}

// exp(-i t (n1 + n2 + 1) / 2) along a sector.
Eigen::VectorXcd kz_phases(const FockWorkspace& ws, int d, double t) {
  const int m = ws.sector_size(d);
  Eigen::VectorXcd p(m);
  for (int k = 0; k < m; ++k) {
    const double kz = 0.5 * (ws.n1(d, k) + ws.n2(d, k) + 1);
    p(k) = std::polar(1.0, -t * kz);
  }
  return p;
}

// Returns {V cos(t L) V^T, V sin(t L) V^T} for the cached Kx spectrum.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> kx_trig(const SectorSpectrum& s, double t) {
  const Eigen::ArrayXd arg = t * s.values.array();
  const Eigen::MatrixXd vc = s.vectors * arg.cos().matrix().asDiagonal();
  const Eigen::MatrixXd vs = s.vectors * arg.sin().matrix().asDiagonal();
  return {vc * s.vectors.transpose(), vs * s.vectors.transpose()};
}

// i^n for integer n.
Complex i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_guard(const OperatorMatrix& stage, const LeakageGuard& guard, double& worst, const char* label) {
  if (guard.state == nullptr) return;
  const double leak = edge_leakage(stage, *guard.state);
  worst = std::max(worst, leak);
  if (leak > guard.tolerance) {
    throw TruncationError(std::string(label) + ": population " + csv::format_double(leak) +
                              " reaches the truncation edge (n_max = " + std::to_string(stage.n_max()) + ")",
                          leak);
  }
}

}  // namespace

FockWorkspace::FockWorkspace(int n_max, Execution execution) : n_max_(n_max), execution_(execution) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  auto spectra = std::make_shared<std::vector<SectorSpectrum>>(sector_count());
  const bool par = parallel(execution);
#pragma omp parallel for schedule(dynamic) if (par)
  for (int s = 0; s < sector_count(); ++s) {
    const int d = s - n_max_;
    const int m = sector_size(d);
    SectorSpectrum& out = (*spectra)[s];
    if (m == 1) {
      out.values = Eigen::VectorXd::Zero(1);
      out.vectors = Eigen::MatrixXd::Identity(1, 1);
      continue;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd sub(m - 1);
    for (int k = 1; k < m; ++k) sub(k - 1) = 0.5 * lowering_element(*this, d, k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    out.values = eig.eigenvalues();
    out.vectors = eig.eigenvectors();
  }
  spectra_ = std::move(spectra);
}

OperatorMatrix::OperatorMatrix(const FockWorkspace& ws, std::vector<Eigen::MatrixXcd> blocks)
    : n_max_(ws.n_max()), execution_(ws.execution()), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != ws.sector_count()) {
    throw DimensionMismatchError("wrong number of sector blocks");
  }
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    const auto& b = block(d);
    if (b.rows() != ws.sector_size(d) || b.cols() != ws.sector_size(d)) {
      throw DimensionMismatchError("sector block " + std::to_string(d) + " has the wrong shape");
    }
  }
}

OperatorMatrix OperatorMatrix::identity(const FockWorkspace& ws) {
  return diagonal(ws, [](int, int) { return Complex(1.0); });
}

OperatorMatrix OperatorMatrix::zero(const FockWorkspace& ws) {
  return diagonal(ws, [](int, int) { return Complex(0.0); });
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out = *this;
  for (auto& b : out.blocks_) b.adjointInPlace();
  return out;
}

Eigen::MatrixXcd OperatorMatrix::to_dense() const {
  const int side = n_max_ + 1;
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(side * side, side * side);
  for (int d = -n_max_; d <= n_max_; ++d) {
    const auto& b = block(d);
    const int o1 = d > 0 ? d : 0;
    const int o2 = d < 0 ? -d : 0;
    auto global = [&](int k) { return (k + o1) * side + (k + o2); };
    for (int j = 0; j < b.rows(); ++j) {
      for (int k = 0; k < b.cols(); ++k) dense(global(j), global(k)) = b(j, k);
    }
  }
  return dense;
}

double OperatorMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (const auto& b : blocks_) {
    if (b.size() > 0) worst = std::max(worst, (b - b.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double OperatorMatrix::unitarity_defect() const {
  double worst = 0.0;
  for (const auto& b : blocks_) {
    const Eigen::MatrixXcd g = b.adjoint() * b - Eigen::MatrixXcd::Identity(b.rows(), b.cols());
    worst = std::max(worst, g.cwiseAbs().maxCoeff());
  }
  return worst;
}

bool OperatorMatrix::is_diagonal() const {
  for (const auto& b : blocks_) {
    for (int j = 0; j < b.rows(); ++j) {
      for (int k = 0; k < b.cols(); ++k) {
        if (j != k && b(j, k) != Complex(0.0)) return false;
      }
    }
  }
  return true;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same(n_max_, other.n_max_);
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += other.blocks_[s];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same(n_max_, other.n_max_);
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] -= other.blocks_[s];
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scale) {
  for (auto& b : blocks_) b *= scale;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.n_max(), b.n_max());
  OperatorMatrix out = b;
  const int count = static_cast<int>(a.blocks().size());
  const int n = a.n_max();
  const bool par = parallel(a.execution());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int s = 0; s < count; ++s) out.block(s - n).noalias() = a.block(s - n) * b.block(s - n);
  out.set_leakage(0.0);
  return out;
}

OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }

OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }

OperatorMatrix operator*(Complex scale, OperatorMatrix a) { return a *= scale; }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

double max_abs(const OperatorMatrix& m) {
  double worst = 0.0;
  for (const auto& b : m.blocks()) worst = std::max(worst, b.cwiseAbs().maxCoeff());
  return worst;
}

double interior_max_abs(const OperatorMatrix& m) {
  // Within a sector, every state except the last has max(n1, n2) <= n_max - 1.
  double worst = 0.0;
  for (const auto& b : m.blocks()) {
    const Eigen::Index inner = b.rows() - 1;
    if (inner > 0) worst = std::max(worst, b.topLeftCorner(inner, inner).cwiseAbs().maxCoeff());
  }
  return worst;
}

Generators build_generators(const FockWorkspace& ws) {
  std::vector<Eigen::MatrixXcd> kx(ws.sector_count());
  std::vector<Eigen::MatrixXcd> ky(ws.sector_count());
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    const int m = ws.sector_size(d);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(m, m);
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
      const double s = 0.5 * lowering_element(ws, d, k);
      x(k - 1, k) = s;
      x(k, k - 1) = s;
      y(k - 1, k) = kI * s;
      y(k, k - 1) = -kI * s;
    }
    kx[d + ws.n_max()] = std::move(x);
    ky[d + ws.n_max()] = std::move(y);
  }

  std::vector<Eigen::Triplet<Complex>> t1;
  std::vector<Eigen::Triplet<Complex>> t2;
  const int n = ws.n_max();
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n2 <= n; ++n2) {
      if (n1 > 0) t1.emplace_back(ws.index(n1 - 1, n2), ws.index(n1, n2), std::sqrt(static_cast<double>(n1)));
      if (n2 > 0) t2.emplace_back(ws.index(n1, n2 - 1), ws.index(n1, n2), std::sqrt(static_cast<double>(n2)));
    }
  }
  SparseOperator a1(ws.dim(), ws.dim());
  SparseOperator a2(ws.dim(), ws.dim());
  a1.setFromTriplets(t1.begin(), t1.end());
  a2.setFromTriplets(t2.begin(), t2.end());

  return Generators{
      OperatorMatrix(ws, std::move(kx)),
      OperatorMatrix(ws, std::move(ky)),
      OperatorMatrix::diagonal(ws, [](int n1, int n2) { return Complex(0.5 * (n1 + n2 + 1)); }),
      OperatorMatrix::diagonal(ws, [](int n1, int n2) { return Complex(n1 + n2); }),
      std::move(a1),
      std::move(a2),
  };
}

OperatorMatrix casimir(const Generators& g) { return g.kz * g.kz - g.kx * g.kx - g.ky * g.ky; }

ThermalState::ThermalState(const FockWorkspace& ws, double beta, double omega, std::vector<Eigen::VectorXd> weights,
                           double leakage, double edge_occupancy)
    : n_max_(ws.n_max()),
      beta_(beta),
      omega_(omega),
      weights_(std::move(weights)),
      leakage_(leakage),
      edge_occupancy_(edge_occupancy) {}

double ThermalState::log_partition_function() const {
  // [2 sinh(x/2)]^-2 = e^-x (1 - e^-x)^-2
  const double x = beta_ * omega_;
  return -x - 2.0 * std::log1p(-std::exp(-x));
}

double ThermalState::partition_function() const { return std::exp(log_partition_function()); }

double ThermalState::trace() const {
  double t = 0.0;
  for (const auto& w : weights_) t += w.sum();
  return t;
}

OperatorMatrix ThermalState::density_matrix(const FockWorkspace& ws) const {
  require_same(n_max_, ws.n_max());
  std::vector<Eigen::MatrixXcd> blocks(ws.sector_count());
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    blocks[d + n_max_] = weights(d).cast<Complex>().asDiagonal();
  }
  return OperatorMatrix(ws, std::move(blocks));
}

ThermalState thermal_state(const FockWorkspace& ws, double beta, double omega, const TruncationPolicy& policy) {
  if (!(beta > 0.0) || !(omega > 0.0) || std::isnan(beta * omega)) {
    throw DomainError("thermal state needs beta > 0 and omega > 0");
  }
  const double x = beta * omega;
  const int n = ws.n_max();
  // Two-mode weights (1 - q)^2 q^(n1 + n2), q = e^-x. The retained trace is
  // (1 - q^(n_max+1))^2 before renormalisation.
  const double tail = std::exp(-x * (n + 1));
  const double leakage = tail * (2.0 - tail);
  const double edge = -std::expm1(-x) * std::exp(-x * n);
  if (leakage > policy.thermal_leakage) {
    throw TruncationError("thermal weight outside n_max = " + std::to_string(n) + " is " + csv::format_double(leakage),
                          leakage);
  }
  if (edge > policy.edge_occupancy) {
    throw TruncationError("thermal occupancy of level n_max = " + std::to_string(n) + " is " + csv::format_double(edge),
                          edge);
  }
  const double one_minus_q = -std::expm1(-x);
  const double norm = one_minus_q * one_minus_q / ((1.0 - tail) * (1.0 - tail));
  std::vector<Eigen::VectorXd> weights(ws.sector_count());
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    const int m = ws.sector_size(d);
    Eigen::VectorXd w(m);
    for (int k = 0; k < m; ++k) w(k) = norm * std::exp(-x * (ws.n1(d, k) + ws.n2(d, k)));
    weights[d + n] = std::move(w);
  }
  return ThermalState(ws, beta, omega, std::move(weights), leakage, edge);
}

OperatorMatrix exp_kx(const FockWorkspace& ws, double t) {
  std::vector<Eigen::MatrixXcd> blocks(ws.sector_count());
  const bool par = parallel(ws.execution());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int s = 0; s < ws.sector_count(); ++s) {
    const auto [c, sn] = kx_trig(ws.kx_spectrum(s - ws.n_max()), t);
    Eigen::MatrixXcd b(c.rows(), c.cols());
    b.real() = c;
    b.imag() = -sn;
    blocks[s] = std::move(b);
  }
  return OperatorMatrix(ws, std::move(blocks));
}

OperatorMatrix exp_ky(const FockWorkspace& ws, double t) {
  // Ky = -D Kx D^dagger with D = diag(i^k), so exp(-i t Ky) = D exp(i t Kx) D^dagger.
  std::vector<Eigen::MatrixXcd> blocks(ws.sector_count());
  const bool par = parallel(ws.execution());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int s = 0; s < ws.sector_count(); ++s) {
    const auto [c, sn] = kx_trig(ws.kx_spectrum(s - ws.n_max()), t);
    const Eigen::Index m = c.rows();
    Eigen::MatrixXcd b(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (Eigen::Index j = 0; j < m; ++j) {
        b(j, k) = i_power(static_cast<int>(j - k)) * Complex(c(j, k), sn(j, k));
      }
    }
    blocks[s] = std::move(b);
  }
  return OperatorMatrix(ws, std::move(blocks));
}

OperatorMatrix exp_kz(const FockWorkspace& ws, double t) {
  std::vector<Eigen::MatrixXcd> blocks(ws.sector_count());
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) {
    blocks[d + ws.n_max()] = kz_phases(ws, d, t).asDiagonal();
  }
  return OperatorMatrix(ws, std::move(blocks));
}

OperatorMatrix exp_hermitian(const OperatorMatrix& h, double t) {
  OperatorMatrix out = h;
  const int count = static_cast<int>(h.blocks().size());
  const int n = h.n_max();
  const bool par = parallel(h.execution());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int s = 0; s < count; ++s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.block(s - n));
    const Eigen::VectorXcd phases = (Complex(0.0, -t) * eig.eigenvalues().cast<Complex>()).array().exp();
    out.block(s - n) = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  }
  out.set_leakage(0.0);
  return out;
}

namespace {

// diag(p_d) * M, per sector.
OperatorMatrix phase_left(const FockWorkspace& ws, double t, OperatorMatrix m) {
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) m.block(d) = kz_phases(ws, d, t).asDiagonal() * m.block(d);
  return m;
}

// M * diag(p_d), per sector.
OperatorMatrix phase_right(const FockWorkspace& ws, OperatorMatrix m, double t) {
  for (int d = ws.min_sector(); d <= ws.max_sector(); ++d) m.block(d) = m.block(d) * kz_phases(ws, d, t).asDiagonal();
  return m;
}

}  // namespace

OperatorMatrix unitary_product(const InterferometerAngles& angles, const FockWorkspace& ws, const LeakageGuard& guard) {
  double worst = 0.0;
  // Acting on a ket: anti-squeeze first, then the phase, then the squeeze.
  const OperatorMatrix first = exp_kx(ws, -angles.zeta());
  check_guard(first, guard, worst, "unitary_product (first squeeze)");
  OperatorMatrix u = exp_kx(ws, angles.zeta()) * phase_left(ws, angles.phi(), first);
  check_guard(u, guard, worst, "unitary_product");
  u.set_leakage(worst);
  return u;
}

OperatorMatrix unitary_equiv(const ProtocolEndpoints& endpoints, const FockWorkspace& ws, const LeakageGuard& guard) {
  double worst = 0.0;
  OperatorMatrix u = phase_right(ws, phase_left(ws, -endpoints.theta(), exp_ky(ws, -endpoints.chi())), endpoints.theta());
  check_guard(u, guard, worst, "unitary_equiv");
  u.set_leakage(worst);
  return u;
}

OperatorMatrix evolution_endpoint(double f_y, double f_z, const FockWorkspace& ws, const LeakageGuard& guard) {
  double worst = 0.0;
  OperatorMatrix u = phase_left(ws, f_z, exp_ky(ws, f_y));
  check_guard(u, guard, worst, "evolution_endpoint");
  u.set_leakage(worst);
  return u;
}

OperatorMatrix hamiltonian_final(double omega_f, double f_y, const FockWorkspace& ws) {
  const Generators g = build_generators(ws);
  return Complex(2.0 * omega_f * std::cosh(f_y)) * g.kz - Complex(2.0 * omega_f * std::sinh(f_y)) * g.kx;
}

double edge_leakage(const OperatorMatrix& u, const ThermalState& state) {
  require_same(u.n_max(), state.n_max());
  double leak = 0.0;
  for (int d = -u.n_max(); d <= u.n_max(); ++d) {
    const auto& b = u.block(d);
    const auto& w = state.weights(d);
    leak += (b.row(b.rows() - 1).cwiseAbs2().transpose().array() * w.array()).sum();
  }
  return leak;
}

Moments moments(const OperatorMatrix& op, const ThermalState& state) {
  require_same(op.n_max(), state.n_max());
  Complex mean = 0.0;
  Complex second = 0.0;
  for (int d = -op.n_max(); d <= op.n_max(); ++d) {
    const auto& b = op.block(d);
    const auto& w = state.weights(d);
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      mean += w(k) * b(k, k);
      second += w(k) * b.row(k).transpose().cwiseProduct(b.col(k)).sum();
    }
  }
  return {mean.real(), second.real() - mean.real() * mean.real(), std::abs(mean.imag()) + std::abs(second.imag())};
}

double expect(const OperatorMatrix& op, const ThermalState& state) { return moments(op, state).mean; }

double variance(const OperatorMatrix& op, const ThermalState& state) { return moments(op, state).variance; }

Moments evolved_moments(const OperatorMatrix& u, const OperatorMatrix& op, const ThermalState& state) {
  // With O Hermitian and U unitary on the retained block:
  //   <U^dag O U>   = sum_k w_k u_k^dag (O u_k)
  //   <U^dag O^2 U> = sum_k w_k |O u_k|^2
  require_same(u.n_max(), op.n_max());
  require_same(u.n_max(), state.n_max());
  const bool diag = op.is_diagonal();
  Complex mean = 0.0;
  double second = 0.0;
  for (int d = -u.n_max(); d <= u.n_max(); ++d) {
    const auto& ub = u.block(d);
    const auto& w = state.weights(d);
    Eigen::MatrixXcd ou;
    if (diag) {
      ou = op.block(d).diagonal().asDiagonal() * ub;
    } else {
      ou.noalias() = op.block(d) * ub;
    }
    for (Eigen::Index k = 0; k < ub.cols(); ++k) {
      mean += w(k) * ub.col(k).dot(ou.col(k));
      second += w(k) * ou.col(k).squaredNorm();
    }
  }
  return {mean.real(), second - mean.real() * mean.real(), std::abs(mean.imag())};
}

}  // namespace su11::fock
