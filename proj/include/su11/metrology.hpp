#pragma once

// Phase sensitivity of the expansion stroke read as an SU(1,1) interferometer.
// The input is the hot-bath thermal state at omega2, so N_in + 1 = c_h =
// coth(beta_h omega2 / 2); the squeezing is chi = chi_from(zeta, phi).

#include <string>

#include "su11/core.hpp"

namespace su11 {

// paper: dN/dphi = sin(phi) sinh^2(zeta) c_h^2 (squared occupancy factor)
// chain: dN/dphi = sin(phi) sinh^2(zeta) c_h   (chain rule on N_out)
enum class DerivativeMode { paper, chain };
enum class Observable { number, energy };

const char* to_string(DerivativeMode mode);
const char* to_string(Observable observable);
// Throws ConfigError on anything but "paper" / "chain".
DerivativeMode parse_derivative_mode(const std::string& text);

// 1/2 [cosh(2 chi) c_h^2 - 1]
double variance_n(const EngineConfig& config, double chi);
// 2 omega1^2 [var_N + (c_h^2 + 1)/4]
double variance_h(const EngineConfig& config, double chi);

double dn_dphi_paper(const EngineConfig& config, double zeta, double phi);
double dn_dphi_chain(const EngineConfig& config, double zeta, double phi);
double dn_dphi(const EngineConfig& config, double zeta, double phi, DerivativeMode mode);

// N_H(phi) = n_out(c_h - 1, chi_from(zeta, phi)).
double number_after_expansion(const EngineConfig& config, double zeta, double phi);

struct PhaseError {
  double value;     // +inf when the slope vanishes
  bool divergent;
};

// Delta O / |dO/dphi|, with dH/dphi = omega1 dN/dphi.
PhaseError delta_phi(const EngineConfig& config, double zeta, double phi, Observable observable,
                     DerivativeMode mode);

struct ShotNoise {
  double n_phi;       // c_h cosh(zeta) - 1
  double delta_phi;   // 1 / sqrt(n_phi)
};

// Throws DomainError when n_phi <= 0.
ShotNoise snl(const EngineConfig& config, double zeta);

struct SensitivityPoint {
  double phi;
  double delta_phi_n;
  double delta_phi_h;
  double snl;
  double norm_n;
  double norm_h;
  bool divergent;
};

SensitivityPoint sensitivity(const EngineConfig& config, double zeta, double phi, DerivativeMode mode);

struct SupersensitivityRange {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
  // More than one sub-SNL window was found; [lo, hi] is their hull.
  bool disjoint = false;
};

struct ScanOptions {
  int points = 2000;
  double phi_lo = 1e-6;     // scan covers [phi_lo, pi - phi_lo]
  double resolution = 1e-6; // bisection width for range edges
  double tolerance = 1e-10; // golden-section bracket width
};

SupersensitivityRange supersensitivity_range(const EngineConfig& config, double zeta, Observable observable,
                                             DerivativeMode mode, const ScanOptions& options = {});

struct SensitivityMinimum {
  double phi_star;
  double delta_phi_min;
  // Best point of the coarse scan, kept for the dual-method check.
  double scan_phi;
  double scan_value;
  bool non_unimodal;
  std::string warning;
};

// Coarse scan, then golden section around the best scan point.
SensitivityMinimum minimize_sensitivity(const EngineConfig& config, double zeta, Observable observable,
                                        DerivativeMode mode, const ScanOptions& options = {});

struct SnlSolution {
  double zeta_snl;
  double phi_snl;
  double chi_snl;
  double eta_snl;
  double delta_phi_min;
  double snl;
  int iterations;
};

struct SnlOptions {
  double zeta_lo = 0.5;
  double zeta_hi = 8.0;
  double tolerance = 1e-6;
  ScanOptions scan{};
};

// Bisection on delta_phi_min(zeta) / snl(zeta) - 1. Throws NoCrossingError
// when the bracket holds no sign change.
SnlSolution solve_zeta_snl(const EngineConfig& config, Observable observable, DerivativeMode mode,
                           const SnlOptions& options = {});

}  // namespace su11
