#include <doctest.h>

#include <cstring>

#include "su11/core.hpp"
#include "su11/errors.hpp"
#include "su11/numerics.hpp"
#include "su11/sweep.hpp"

using namespace su11;

namespace {
const EngineConfig kEngine(0.1, 1.0, 2.0, 0.01);

template <class T>
bool same_bytes(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}
}  // namespace

TEST_CASE("linear grid") {
  const auto g = linear_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == 0.5);
  CHECK_THROWS(linear_grid(0.0, 1.0, 1));
}

TEST_CASE("serial and parallel sweeps are bitwise identical") {
  const auto phis = linear_grid(1e-6, numerics::kPi - 1e-6, 777);
  for (auto mode : {DerivativeMode::paper, DerivativeMode::chain}) {
    CHECK(same_bytes(sensitivity_sweep(kEngine, 3.0, phis, mode, Execution::serial),
                     sensitivity_sweep(kEngine, 3.0, phis, mode, Execution::parallel)));
  }
  CHECK(same_bytes(cycle_sweep(kEngine, 2.0, phis, Execution::serial),
                   cycle_sweep(kEngine, 2.0, phis, Execution::parallel)));
}

TEST_CASE("cycle rows") {
  const auto rows = cycle_sweep(kEngine, 2.0, {0.0, 0.3, 1.0}, Execution::serial);
  CHECK(rows[0].chi == 0.0);
  CHECK(rows[0].eta == doctest::Approx(0.9));
  CHECK(rows[1].w_net > 0.0);
  CHECK(rows[2].w_net < 0.0);
}

TEST_CASE("sensitivity rows flag divergence") {
  const auto rows = sensitivity_sweep(kEngine, 2.0, {0.0, 0.2}, DerivativeMode::chain, Execution::serial);
  CHECK(rows[0].divergent);
  CHECK_FALSE(rows[1].divergent);
  CHECK(rows[1].norm_n > 0.0);
}
