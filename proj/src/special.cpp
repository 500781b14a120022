#include "su11/special.hpp"

#include <array>
#include <cmath>

#include "su11/errors.hpp"

namespace su11 {

namespace {

// Lanczos coefficients for g = 671/128 (14 terms), good to ~1e-15 in Gamma.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoefficients = {
    57.1562356658629235,      -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,    .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4,  .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,   -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4,  .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  std::complex<double> series = kLanczosC0;
  std::complex<double> denom = z;
  for (double c : kLanczosCoefficients) {
    denom += 1.0;
    series += c / denom;
  }
  const std::complex<double> t = z + kLanczosG;
  return (z + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * series / z);
}

}  // namespace

std::complex<double> complex_log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("log Gamma has a pole at non-positive integers");
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);

  // log Gamma(z) = log Gamma(z + n) - sum_k log(z + k). Each log(z + k) is
  // principal, which keeps the result on the principal branch of the cut plane.
  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  std::complex<double> correction = 0.0;
  for (int k = 0; k < shift; ++k) correction += std::log(z + static_cast<double>(k));
  return lanczos_log_gamma(z + static_cast<double>(shift)) - correction;
}

}  // namespace su11
