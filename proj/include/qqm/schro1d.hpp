#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qqm/error.hpp"
#include "qqm/fit.hpp"

namespace qqm::schro1d {

// Conventions (hbar = 1, 2m = 1): the quaternionic Hamiltonian is
//   H = i(-d2/dx2 + V_alpha) + j V2 + k V3,
// and with V_beta = V2 - i V3 the right-eigenvalue equation H psi = psi i E
// splits into the coupled pair
//   psi_alpha'' = (V_alpha - E) psi_alpha + i conj(V_beta) psi_beta
//   psi_beta''  = (V_alpha + E) psi_beta  + i V_beta       psi_alpha.
// For E > 0 the alpha channel is open with wave number p = sqrt(E); the beta
// channel is closed and decays as exp(-kappa |x|) with kappa = p outside the
// support of V.

struct PotentialSegment {
  double x_left = 0, x_right = 0;
  double v_alpha = 0, v2 = 0, v3 = 0;
};

/// Compact-support quaternionic potential (V_alpha, V2, V3), either piecewise
/// constant or sampled on a grid with linear interpolation between knots.
/// All three components are real; |V| < support_tol defines "outside".
class Potential1D {
 public:
  static constexpr double support_tol = 1e-14;

  static Potential1D piecewise(std::vector<PotentialSegment> segments);
  static Potential1D sampled(Eigen::VectorXd x, Eigen::VectorXd v_alpha,
                             Eigen::VectorXd v2, Eigen::VectorXd v3);

  bool piecewise_constant() const { return piecewise_; }
  const std::vector<PotentialSegment>& segments() const { return segments_; }
  const Eigen::VectorXd& sample_x() const { return x_; }
  const Eigen::VectorXd& sample_v_alpha() const { return va_; }
  const Eigen::VectorXd& sample_v2() const { return v2_; }
  const Eigen::VectorXd& sample_v3() const { return v3_; }

  /// True when every value is below support_tol (free propagation).
  bool vanishes() const { return !has_support_; }
  double support_min() const;
  double support_max() const;
  /// True when the j,k components vanish identically (standard complex QM).
  bool complex_only() const;

  void value(double x, double& v_alpha, std::complex<double>& v_beta) const;
  Potential1D translated(double dx) const;

 private:
  Potential1D() = default;
  bool piecewise_ = true;
  std::vector<PotentialSegment> segments_;
  Eigen::VectorXd x_, va_, v2_, v3_;
  bool has_support_ = false;
  double support_min_ = 0, support_max_ = 0;
};

struct ScatteringAmplitudes1D {
  std::complex<double> r, t;
  /// Coefficients of exp(+kappa x) (left of support) and exp(-kappa x)
  /// (right of support) in the closed channel.
  std::complex<double> c_beta_left, c_beta_right;
  double E = 0, p = 0;
  double flux_defect() const { return std::norm(r) + std::norm(t) - 1.0; }
};

struct SolverOptions1D {
  double max_step = 0.005;    ///< RK4 step bound for sampled potentials
  double growth_cap = 15.0;   ///< max kappa*width per global-system interval
  double cond_limit = 1e12;   ///< hard error above this matching condition number
  double residual_tol = 1e-8; ///< relative matching-residual (growing-mode leakage) bound
};

/// Full solution record: matching amplitudes plus the mesh states needed to
/// evaluate the wavefunction anywhere.
class Solution1D {
 public:
  const ScatteringAmplitudes1D& amplitudes() const { return amps_; }
  double kappa() const { return kappa_; }
  double condition_number() const { return condition_; }
  double matching_residual() const { return residual_; }

  /// Evaluate (psi_alpha, psi_beta) at x. Outside the support the state is
  /// continued numerically from the interior, so growing-mode contamination
  /// from an imperfect matching shows up rather than being hidden.
  void evaluate(double x, std::complex<double>& psi_alpha,
                std::complex<double>& psi_beta) const;

  double support_min() const { return x_left_; }
  double support_max() const { return x_right_; }
  bool free_solution() const { return nodes_.empty(); }

 private:
  friend Solution1D solve(const std::vector<Potential1D>& pots, double E,
                          const SolverOptions1D& opts);
  ScatteringAmplitudes1D amps_;
  double p_ = 0, kappa_ = 0;
  double x_left_ = 0, x_right_ = 0;
  double condition_ = 0, residual_ = 0;
  std::vector<double> nodes_;                       // x_0..x_K
  std::vector<Eigen::Matrix4cd> props_;             // interval propagators
  std::vector<Eigen::Vector4cd> states_;            // y at nodes
  std::vector<const void*> interval_pot_;           // potential owning each interval
  std::vector<Potential1D> pots_;
  SolverOptions1D opts_;
  // edge-referenced closed-channel amplitudes: psi_beta = cl*exp(+kappa(x-x0))
  // to the left, cr*exp(-kappa(x-xK)) to the right
  std::complex<double> cl_edge_, cr_edge_;
};

/// Solve the scattering problem for the union of the given potentials
/// (supports must not overlap). Boundary conditions: unit incident wave from
/// the left, outgoing transmitted wave, decaying closed channel on both sides.
Solution1D solve(const std::vector<Potential1D>& pots, double E,
                 const SolverOptions1D& opts = {});

ScatteringAmplitudes1D solve_scattering_1d(const Potential1D& pot, double E,
                                           const SolverOptions1D& opts = {});

struct WaveProfile1D {
  Eigen::VectorXd x;
  Eigen::VectorXcd psi_alpha, psi_beta;
  bool has_support = false;
  double support_min = 0, support_max = 0;
};

/// Profile on the given grid; the grid must cover the potential support.
WaveProfile1D wave_profile_1d(const Potential1D& pot, double E,
                              const Eigen::VectorXd& grid,
                              const SolverOptions1D& opts = {});

struct DecayFit {
  double kappa = 0;      ///< fitted decay rate (positive for true decay)
  double r_squared = 0;
  double intercept = 0;
  int points = 0;
};

/// Least-squares fit of log|psi_beta| over a window [x_lo, x_hi] that lies
/// entirely outside the support. The headline physics check is
/// kappa ~ sqrt(E).
DecayFit beta_decay_rate(const WaveProfile1D& profile, double x_lo, double x_hi,
                         double floor = 1e-12);

struct CompositeResult {
  std::complex<double> t_ab, t_ba;
  double delta = 0;       ///< |t_ab - t_ba|
  double phase_diff = 0;  ///< arg(t_ab) - arg(t_ba), wrapped to (-pi, pi]
};

/// Two-barrier composition in both orders, with a gap d >= 0 between the
/// supports. delta > 0 only through the closed-channel coupling between the
/// barriers, which decays as exp(-sqrt(E) d).
CompositeResult composite_noncommutativity(const Potential1D& pot_a,
                                           const Potential1D& pot_b, double d,
                                           double E, const SolverOptions1D& opts = {});

}  // namespace qqm::schro1d
