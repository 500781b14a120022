#include <doctest.h>

#include <cmath>

#include "su11/core.hpp"
#include "su11/errors.hpp"
#include "su11/fock.hpp"
#include "su11/numerics.hpp"

using namespace su11;
using namespace su11::fock;

namespace {

double dense_diff(const OperatorMatrix& a, const Eigen::MatrixXcd& b) { return (a.to_dense() - b).cwiseAbs().maxCoeff(); }

bool bitwise_equal(const OperatorMatrix& a, const OperatorMatrix& b) {
  for (std::size_t k = 0; k < a.blocks().size(); ++k) {
    const auto& x = a.blocks()[k];
    const auto& y = b.blocks()[k];
    if (x.rows() != y.rows()) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x.data()[i] != y.data()[i]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("workspace indexing") {
  const FockWorkspace ws(4);
  CHECK(ws.dim() == 25);
  CHECK(ws.sector_count() == 9);
  CHECK(ws.sector_size(0) == 5);
  CHECK(ws.sector_size(-4) == 1);
  CHECK(ws.n1(2, 1) == 3);
  CHECK(ws.n2(2, 1) == 1);
  CHECK(ws.n2(-2, 0) == 2);
}

TEST_CASE("generators match the dense reference") {
  const int n = 8;
  const FockWorkspace ws(n);
  const Generators g = build_generators(ws);
  const reference::DenseGenerators d = reference::dense_generators(n);
  CHECK(dense_diff(g.kx, d.kx) < 1e-14);
  CHECK(dense_diff(g.ky, d.ky) < 1e-14);
  CHECK(dense_diff(g.kz, d.kz) < 1e-14);
  CHECK(dense_diff(g.n, d.n) < 1e-14);
}

TEST_CASE("sector exponentials match the dense reference") {
  const int n = 10;
  const FockWorkspace ws(n);
  const reference::DenseGenerators d = reference::dense_generators(n);
  CHECK(dense_diff(exp_kx(ws, 0.7), reference::dense_exp(d.kx, 0.7)) < 1e-11);
  CHECK(dense_diff(exp_ky(ws, -0.4), reference::dense_exp(d.ky, -0.4)) < 1e-11);
  CHECK(dense_diff(exp_kz(ws, 1.3), reference::dense_exp(d.kz, 1.3)) < 1e-12);

  const InterferometerAngles a(0.5, 0.9);
  CHECK(dense_diff(unitary_product(a, ws), reference::dense_unitary_product(a, d)) < 1e-11);
  CHECK(dense_diff(unitary_equiv(endpoints_from(a), ws), reference::dense_unitary_equiv(endpoints_from(a), d)) < 1e-11);
  CHECK(dense_diff(evolution_endpoint(-0.3, 0.8, ws), reference::dense_evolution_endpoint(-0.3, 0.8, d)) < 1e-11);
}

TEST_CASE("thermal state") {
  const FockWorkspace ws(120);
  const Generators g = build_generators(ws);
  const ThermalState rho = thermal_state(ws, 0.5, 1.0);
  CHECK(expect(g.n, rho) == doctest::Approx(3.0829881650735965683).epsilon(1e-12));
  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rho.log_partition_function() == doctest::Approx(-2.0 * std::log(2.0 * std::sinh(0.25))).epsilon(1e-14));
  CHECK_THROWS_AS(thermal_state(FockWorkspace(10), 0.1, 1.0), TruncationError);
}

TEST_CASE("three unitary forms agree on moments") {
  const FockWorkspace ws(60);
  const Generators g = build_generators(ws);
  const ThermalState rho = thermal_state(ws, 1.0, 1.0);
  const InterferometerAngles a(0.4, 0.9);
  const double chi = chi_from(a);
  const double theta = theta_from(a);
  const double m1 = evolved_moments(unitary_product(a, ws), g.n, rho).mean;
  const double m2 = evolved_moments(unitary_equiv(ProtocolEndpoints(chi, theta), ws), g.n, rho).mean;
  const double m3 = evolved_moments(evolution_endpoint(-chi, -theta, ws), g.n, rho).mean;
  CHECK(std::abs(m1 - m2) < 1e-10);
  CHECK(std::abs(m2 - m3) < 1e-10);
  CHECK(m1 == doctest::Approx(n_out(numerics::coth(0.5) - 1.0, chi)).epsilon(1e-9));
}

TEST_CASE("leakage guard refuses strong squeezing") {
  const FockWorkspace ws(20);
  const ThermalState rho = thermal_state(ws, 2.0, 1.0, TruncationPolicy{1e-10, 1e-12, 1e-8});
  const LeakageGuard guard{&rho, 1e-8};
  CHECK_THROWS_AS(unitary_product(InterferometerAngles(2.5, 2.0), ws, guard), TruncationError);
  CHECK_NOTHROW(unitary_product(InterferometerAngles(0.05, 0.3), ws, guard));
}

TEST_CASE("serial and parallel kernels are bitwise identical") {
  const FockWorkspace par(40, Execution::parallel);
  const FockWorkspace ser(40, Execution::serial);
  const InterferometerAngles a(0.8, 2.0);
  CHECK(bitwise_equal(unitary_product(a, par), unitary_product(a, ser)));
  CHECK(bitwise_equal(unitary_equiv(endpoints_from(a), par), unitary_equiv(endpoints_from(a), ser)));
  const ThermalState rp = thermal_state(par, 1.0, 1.0);
  const ThermalState rs = thermal_state(ser, 1.0, 1.0);
  const Generators gp = build_generators(par);
  const Generators gs = build_generators(ser);
  CHECK(evolved_moments(unitary_product(a, par), gp.n, rp).mean ==
        evolved_moments(unitary_product(a, ser), gs.n, rs).mean);
}

TEST_CASE("operator algebra basics") {
  const FockWorkspace ws(6);
  const Generators g = build_generators(ws);
  CHECK(g.kx.hermitian());
  CHECK(g.kz.is_diagonal());
  CHECK(exp_kx(ws, 0.3).unitary());
  CHECK(max_abs(commutator(g.kz, g.n)) == 0.0);
  CHECK(interior_max_abs(commutator(g.kx, g.ky) + Complex(0.0, 1.0) * g.kz) < 1e-13);
}
