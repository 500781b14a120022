#pragma once

// Coordinates of the SU(1,1) transformation and the engine operating range.
//
// Two parametrisations describe the same unitary:
//   interferometer form  U = exp(-i zeta Kx) exp(-i phi Kz) exp(i zeta Kx)
//   protocol form        U = exp(i theta Kz) exp(i chi Ky) exp(-i theta Kz)
// with cosh chi = (1 - cos phi) cosh^2 zeta + cos phi and
//      cos theta = sin phi / sqrt(sin^2 phi + (1 - cos phi)^2 cosh^2 zeta).
// Units: hbar = k_B = 1 throughout.

namespace su11 {

class InterferometerAngles {
 public:
  // Throws DomainError for zeta < 0 or non-finite input; phi is wrapped to [0, 2pi).
  InterferometerAngles(double zeta, double phi);

  double zeta() const { return zeta_; }
  double phi() const { return phi_; }

 private:
  double zeta_;
  double phi_;
};

// End-of-stroke protocol values: chi = -f_y(t_f), theta = -f_z(t_f).
// chi is kept non-negative; a negative squeeze is the same unitary as
// (|chi|, theta + pi), see ProtocolEndpoints::from_signed.
class ProtocolEndpoints {
 public:
  ProtocolEndpoints(double chi, double theta);

  static ProtocolEndpoints from_signed(double chi, double theta);

  double chi() const { return chi_; }
  double theta() const { return theta_; }

 private:
  double chi_;
  double theta_;
};

class EngineConfig {
 public:
  // Requires omega2 > omega1 > 0 and t_hot > t_cold > 0.
  EngineConfig(double omega1, double omega2, double t_hot, double t_cold);

  // Only positivity is enforced. Used for degenerate cycles (omega1 == omega2,
  // equal baths) and for the frequency/bath exchange map.
  static EngineConfig relaxed(double omega1, double omega2, double t_hot, double t_cold);

  double omega1() const { return omega1_; }
  double omega2() const { return omega2_; }
  double t_hot() const { return t_hot_; }
  double t_cold() const { return t_cold_; }
  double beta_hot() const { return 1.0 / t_hot_; }
  double beta_cold() const { return 1.0 / t_cold_; }

  // coth(beta_c omega1 / 2): occupancy factor of the cold-bath state at omega1.
  double coth_cold() const;
  // coth(beta_h omega2 / 2): occupancy factor of the hot-bath state at omega2.
  double coth_hot() const;

  // Exchanges omega1 <-> omega2 and the two baths. Maps compression quantities
  // onto expansion quantities.
  EngineConfig swapped() const;

 private:
  struct Unchecked {};
  EngineConfig(Unchecked, double omega1, double omega2, double t_hot, double t_cold);

  double omega1_;
  double omega2_;
  double t_hot_;
  double t_cold_;
};

double chi_from(const InterferometerAngles& angles);

// Principal branch theta in (0, pi). Throws DegeneratePhaseError at phi = 0.
double theta_from(const InterferometerAngles& angles);

ProtocolEndpoints endpoints_from(const InterferometerAngles& angles);

struct AnglesSolution {
  InterferometerAngles angles;
  // chi == 0: every (0, phi) is the identity; the minimal-zeta member
  // (zeta = 0, phi = 2 theta) is returned.
  bool identity_family = false;
  double residual = 0.0;
  int iterations = 0;
};

struct InversionOptions {
  double tolerance = 1e-12;
  int max_iterations = 200;
};

// Inverts chi_from/theta_from. Newton on the half-phase with a bisection
// fallback; zeta follows from sinh(chi/2) = sin(phi/2) sinh(zeta).
// Throws NoSolutionError when tan|theta| <= sinh(chi/2) (no real zeta),
// NonConvergenceError past the iteration cap.
AnglesSolution angles_from(const ProtocolEndpoints& endpoints, const InversionOptions& options = {});

// (n_in + 1) cosh chi - 1.
double n_out(double n_in, double chi);

// Largest chi with non-negative net work. Throws NoEngineRegimeError when no
// chi gives positive work.
double chi_max(const EngineConfig& config);

struct PhaseLimit {
  double phi_max;
  // True when every phase in [0, pi] keeps the engine regime (including zeta = 0,
  // where the engine is phase-insensitive).
  bool full_range;
};

PhaseLimit phi_max(double zeta, double chi_max);

}  // namespace su11
