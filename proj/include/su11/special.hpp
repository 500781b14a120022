#pragma once

#include <complex>

namespace su11 {

// Principal branch of log Gamma(z), analytic on the plane cut along (-inf, 0].
// Lanczos series for Re z >= 0.5, upward recurrence below that. Throws
// PoleError at non-positive integers.
std::complex<double> complex_log_gamma(std::complex<double> z);

}  // namespace su11
