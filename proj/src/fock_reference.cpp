#include <cmath>

#include "su11/errors.hpp"
#include "su11/fock.hpp"

namespace su11::fock::reference {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

DenseGenerators dense_generators(int n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  const int side = n_max + 1;
  const int dim = side * side;
  DenseGenerators g;
  g.a1 = Eigen::MatrixXcd::Zero(dim, dim);
  g.a2 = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n1 = 0; n1 <= n_max; ++n1) {
    for (int n2 = 0; n2 <= n_max; ++n2) {
      const int col = n1 * side + n2;
      if (n1 > 0) g.a1((n1 - 1) * side + n2, col) = std::sqrt(static_cast<double>(n1));
      if (n2 > 0) g.a2(n1 * side + n2 - 1, col) = std::sqrt(static_cast<double>(n2));
    }
  }
  // a1 a2 maps the retained block into itself, so its truncation is exact.
  const Eigen::MatrixXcd lower = g.a1 * g.a2;
  g.kx = 0.5 * (lower.adjoint() + lower);
  g.ky = (0.5 * kI) * (lower - lower.adjoint());
  g.n = g.a1.adjoint() * g.a1 + g.a2.adjoint() * g.a2;
  // (a1^dag a1 + a2 a2^dag)/2 written with N, which avoids the truncated a2 a2^dag.
  g.kz = 0.5 * (g.n + Eigen::MatrixXcd::Identity(dim, dim));
  return g;
}

Eigen::MatrixXcd dense_exp(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::VectorXcd phases = (Complex(0.0, -t) * eig.eigenvalues().cast<Complex>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Eigen::MatrixXcd dense_unitary_product(const InterferometerAngles& angles, const DenseGenerators& g) {
  return dense_exp(g.kx, angles.zeta()) * dense_exp(g.kz, angles.phi()) * dense_exp(g.kx, -angles.zeta());
}

Eigen::MatrixXcd dense_unitary_equiv(const ProtocolEndpoints& endpoints, const DenseGenerators& g) {
  return dense_exp(g.kz, -endpoints.theta()) * dense_exp(g.ky, -endpoints.chi()) * dense_exp(g.kz, endpoints.theta());
}

Eigen::MatrixXcd dense_evolution_endpoint(double f_y, double f_z, const DenseGenerators& g) {
  return dense_exp(g.kz, f_z) * dense_exp(g.ky, f_y);
}

Eigen::VectorXd dense_thermal_diagonal(int n_max, double beta, double omega) {
  const int side = n_max + 1;
  Eigen::VectorXd rho(side * side);
  for (int n1 = 0; n1 <= n_max; ++n1) {
    for (int n2 = 0; n2 <= n_max; ++n2) rho(n1 * side + n2) = std::exp(-beta * omega * (n1 + n2 + 1));
  }
  return rho / rho.sum();
}

double dense_evolved_mean(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& op, const Eigen::VectorXd& rho) {
  if (u.rows() != op.rows() || u.rows() != rho.size()) throw DimensionMismatchError("dense operand sizes differ");
  const Eigen::MatrixXcd heis = u.adjoint() * op * u;
  return (heis.diagonal().array() * rho.cast<Complex>().array()).sum().real();
}

}  // namespace su11::fock::reference
