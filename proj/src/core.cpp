#include "su11/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "su11/errors.hpp"
#include "su11/numerics.hpp"

namespace su11 {

using numerics::kPi;

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

InterferometerAngles::InterferometerAngles(double zeta, double phi) {
  require_finite(zeta, "zeta");
  require_finite(phi, "phi");
  if (zeta < 0.0) throw DomainError("zeta must be >= 0");
  zeta_ = zeta;
  phi_ = numerics::wrap_two_pi(phi);
}

ProtocolEndpoints::ProtocolEndpoints(double chi, double theta) {
  require_finite(chi, "chi");
  require_finite(theta, "theta");
  if (chi < 0.0) throw DomainError("chi must be >= 0 (use from_signed)");
  chi_ = chi;
  theta_ = theta;
}

ProtocolEndpoints ProtocolEndpoints::from_signed(double chi, double theta) {
  // exp(i pi Kz) Ky exp(-i pi Kz) = -Ky
  if (chi < 0.0) return {-chi, numerics::wrap_pi(theta + kPi)};
  return {chi, theta};
}

EngineConfig::EngineConfig(Unchecked, double omega1, double omega2, double t_hot, double t_cold)
    : omega1_(omega1), omega2_(omega2), t_hot_(t_hot), t_cold_(t_cold) {
  for (double v : {omega1, omega2, t_hot, t_cold}) {
    if (!std::isfinite(v) || v <= 0.0) throw DomainError("engine frequencies and temperatures must be positive");
  }
}

EngineConfig::EngineConfig(double omega1, double omega2, double t_hot, double t_cold)
    : EngineConfig(Unchecked{}, omega1, omega2, t_hot, t_cold) {
  if (!(omega2 > omega1)) throw DomainError("engine requires omega2 > omega1");
  if (!(t_hot > t_cold)) throw DomainError("engine requires t_hot > t_cold");
}

EngineConfig EngineConfig::relaxed(double omega1, double omega2, double t_hot, double t_cold) {
  return EngineConfig(Unchecked{}, omega1, omega2, t_hot, t_cold);
}

double EngineConfig::coth_cold() const { return numerics::coth(0.5 * omega1_ / t_cold_); }

double EngineConfig::coth_hot() const { return numerics::coth(0.5 * omega2_ / t_hot_); }

EngineConfig EngineConfig::swapped() const { return relaxed(omega2_, omega1_, t_cold_, t_hot_); }

double chi_from(const InterferometerAngles& angles) {
  // cosh chi - 1 = 2 sin^2(phi/2) sinh^2 zeta, i.e. sinh(chi/2) = |sin(phi/2)| sinh zeta.
  // Same relation as the cosh form without the cancellation near chi = 0.
  const double s = std::abs(std::sin(0.5 * angles.phi())) * std::sinh(angles.zeta());
  return 2.0 * std::asinh(s);
}

double theta_from(const InterferometerAngles& angles) {
  const double phi = angles.phi();
  if (phi == 0.0) throw DegeneratePhaseError("theta undefined at phi = 0 (identity transformation)");
  const double half = std::sin(0.5 * phi);
  // (1 - cos phi) cosh zeta >= 0 fixes sin theta >= 0.
  return std::atan2(2.0 * half * half * std::cosh(angles.zeta()), std::sin(phi));
}

ProtocolEndpoints endpoints_from(const InterferometerAngles& angles) {
  return {chi_from(angles), theta_from(angles)};
}

AnglesSolution angles_from(const ProtocolEndpoints& endpoints, const InversionOptions& options) {
  const double chi = endpoints.chi();
  // cos theta is even and 2pi-periodic: reduce to [0, pi].
  double t = numerics::wrap_two_pi(endpoints.theta());
  if (t > kPi) t = 2.0 * kPi - t;

  if (chi == 0.0) {
    return {InterferometerAngles(0.0, 2.0 * t), true, 0.0, 0};
  }

  // theta in (pi/2, pi) comes from phi in (pi, 2pi): solve the mirror image.
  const bool mirrored = t > 0.5 * kPi;
  const double target = mirrored ? kPi - t : t;
  const double s = std::sinh(0.5 * chi);

  // theta(x) rises monotonically from atan(s) at x = 0 to pi/2 at x = pi/2.
  const double margin = target - std::atan(s);
  if (!(margin > 0.0)) {
    throw NoSolutionError("no (zeta, phi) reproduces chi = " + std::to_string(chi) +
                              " with |cos theta| = " + std::to_string(std::cos(target)),
                          -margin);
  }

  auto residual = [&](double x) {
    const double sx = std::sin(x);
    return std::atan2(std::sqrt(sx * sx + s * s), std::cos(x)) - target;
  };

  double lo = 0.0;
  double hi = 0.5 * kPi;
  double x = 0.25 * kPi;
  int it = 0;
  bool converged = target == 0.5 * kPi;
  if (converged) x = 0.5 * kPi;
  for (; !converged && it < options.max_iterations; ++it) {
    const double g = residual(x);
    if (std::abs(g) <= options.tolerance) {
      converged = true;
      break;
    }
    if (g > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double sx = std::sin(x);
    const double slope = sx / std::sqrt(sx * sx + s * s);
    double next = slope > 0.0 ? x - g / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-16) {
      converged = true;
      break;
    }
    x = next;
  }
  if (!converged) throw NonConvergenceError("angles_from: Newton/bisection did not converge", it);

  const double zeta = std::asinh(s / std::sin(x));
  double phi = 2.0 * x;
  if (mirrored) phi = 2.0 * kPi - phi;
  InterferometerAngles angles(zeta, phi);

  const double chi_back = chi_from(angles);
  const double cos_back = std::cos(theta_from(angles));
  const double res = std::max(std::abs(chi_back - chi), std::abs(cos_back - std::cos(t)));
  return {angles, false, res, it};
}

double n_out(double n_in, double chi) {
  if (!(n_in >= 0.0)) throw DomainError("n_in must be >= 0");
  return (n_in + 1.0) * std::cosh(chi) - 1.0;
}

double chi_max(const EngineConfig& config) {
  const double w1 = config.omega1();
  const double w2 = config.omega2();
  const double cc = config.coth_cold();
  const double ch = config.coth_hot();
  const double ratio = (w1 * cc + w2 * ch) / (w2 * cc + w1 * ch);
  if (ratio < 1.0 - numerics::kDomainSlack) {
    throw NoEngineRegimeError("no squeezing gives positive work for this configuration");
  }
  return numerics::acosh_clamped(ratio);
}

PhaseLimit phi_max(double zeta, double chi_max) {
  if (zeta < 0.0 || chi_max < 0.0) throw DomainError("phi_max needs zeta >= 0 and chi_max >= 0");
  if (zeta == 0.0) return {kPi, true};
  // cos phi_max = 1 - 2 sinh^2(chi_max/2) / sinh^2 zeta, written via the half angle.
  const double ratio = std::sinh(0.5 * chi_max) / std::sinh(zeta);
  if (ratio >= 1.0) return {kPi, true};
  return {2.0 * std::asin(ratio), false};
}

}  // namespace su11
