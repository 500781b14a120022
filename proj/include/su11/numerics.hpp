#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "su11/errors.hpp"

namespace su11::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Rounding guard for acosh/acos arguments that sit a hair outside the domain.
inline constexpr double kDomainSlack = 1e-12;

inline double coth(double x) { return 1.0 / std::tanh(x); }

// acosh on [1, inf); values in [1 - slack, 1) are clamped, anything lower throws.
inline double acosh_clamped(double x) {
  if (x < 1.0) {
    if (x < 1.0 - kDomainSlack) throw DomainError("acosh argument below 1");
    return 0.0;
  }
  return std::acosh(x);
}

inline double acos_clamped(double x) {
  if (x > 1.0) {
    if (x > 1.0 + kDomainSlack) throw DomainError("acos argument above 1");
    return 0.0;
  }
  if (x < -1.0) {
    if (x < -1.0 - kDomainSlack) throw DomainError("acos argument below -1");
    return kPi;
  }
  return std::acos(x);
}

// Wraps to [0, 2pi).
inline double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Wraps to (-pi, pi].
inline double wrap_pi(double x) {
  double r = wrap_two_pi(x);
  if (r > kPi) r -= kTwoPi;
  return r;
}

struct Minimum {
  double x;
  double value;
  int iterations;
};

// Golden-section search for a minimum of f on [a, b]. Stops once the bracket is
// narrower than tol.
inline Minimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                       double tol, int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (std::abs(b - a) > tol && it < max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  // The midpoint can lose to an interior probe when f is flat to rounding.
  if (fc <= fx && fc <= fd) return {c, fc, it};
  if (fd < fx) return {d, fd, it};
  return {x, fx, it};
}

struct Root {
  double x;
  int iterations;
};

// Bisection for a sign change of f on [a, b]. f(a) and f(b) must differ in sign.
inline Root bisect(const std::function<double(double)>& f, double a, double b, double tol,
                   int max_iterations = 400) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return {a, 0};
  if (fb == 0.0) return {b, 0};
  if ((fa > 0.0) == (fb > 0.0)) throw NoCrossingError("bisect: no sign change on bracket");
  int it = 0;
  while (std::abs(b - a) > tol && it < max_iterations) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return {m, it};
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
    ++it;
  }
  return {0.5 * (a + b), it};
}

}  // namespace su11::numerics
