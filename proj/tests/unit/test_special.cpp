#include <doctest.h>

#include <cmath>
#include <complex>

#include "su11/errors.hpp"
#include "su11/numerics.hpp"
#include "su11/special.hpp"

using namespace su11;

namespace {
struct Ref {
  double re, im, lre, lim;
};
// Arbitrary-precision values of log Gamma, principal branch.
const Ref kTable[] = {
    {0.5, 0.0, 0.57236494292470008707, 0.0},
    {1.0, 0.0, 0.0, 0.0},
    {3.7000000000000002, 0.0, 1.4280723266653881292, 0.0},
    {0.29999999999999999, 0.20000000000000001, 0.8894083505732667354, -0.62026100688248293096},
    {1.0, -0.34999999999999998, -0.096977742585722302159, 0.18585061224912340955},
    {0.0, 2.5, -3.4661975743687768916, -1.028191920942460091},
    {1.0, 40.0, -60.068474811534223876, 108.33849295121103518},
    {-2.5, 1.5, -3.7175134511917918462, -7.713065525834192526},
    {0.0, -700.0, -1101.9140303907446631, -3884.9707173193586768},
    {1.0, 1000.0, -1566.423510622200878, 5908.5405938121983893},
    {-0.75, 0.0, 1.5757045971498583848, -3.1415926535897932385},
    {0.10000000000000001, -12.0, -18.924538344710172234, -17.187365602845461216},
};
}  // namespace

TEST_CASE("complex log gamma against reference values") {
  for (const Ref& r : kTable) {
    const std::complex<double> g = complex_log_gamma({r.re, r.im});
    const double scale = std::max(1.0, std::abs(std::complex<double>(r.lre, r.lim)));
    CAPTURE(r.re);
    CAPTURE(r.im);
    CHECK(std::abs(g.real() - r.lre) <= 1e-12 * scale);
    CHECK(std::abs(numerics::wrap_pi(g.imag() - r.lim)) <= 1e-12 * scale);
  }
}

TEST_CASE("log gamma poles") {
  CHECK_THROWS_AS(complex_log_gamma({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS(complex_log_gamma({-3.0, 0.0}), PoleError);
}

TEST_CASE("recurrence") {
  const std::complex<double> z(0.7, 3.1);
  const std::complex<double> lhs = complex_log_gamma(z + 1.0);
  const std::complex<double> rhs = complex_log_gamma(z) + std::log(z);
  CHECK(std::abs(lhs.real() - rhs.real()) < 1e-12);
  CHECK(std::abs(numerics::wrap_pi(lhs.imag() - rhs.imag())) < 1e-12);
}

TEST_CASE("numerics helpers") {
  CHECK(numerics::acosh_clamped(1.0 - 1e-14) == 0.0);
  CHECK_THROWS_AS(numerics::acosh_clamped(0.9), DomainError);
  CHECK(numerics::wrap_pi(3.0 * numerics::kPi) == doctest::Approx(numerics::kPi));
  const numerics::Minimum m =
      numerics::golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-8));
}
