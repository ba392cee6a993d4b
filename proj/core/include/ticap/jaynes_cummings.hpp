// Resonant Jaynes-Cummings coupling of the qubit memory to one thermal
// bosonic mode, solved analytically block by block in the interaction
// picture. Time is dimensionless, tau = Omega t.
//
// Within the excitation manifold spanned by |0, n+1> and |1, n> the
// amplitudes mix at Rabi angle sqrt(n+1) tau; |0, 0> is stationary.

#pragma once

#include <optional>
#include <vector>

#include "ticap/states.hpp"

namespace ticap {

struct JCConfig {
  int fock_cutoff = 1;     // bath levels 0..N retained
  double tau_max = 2.0;    // time horizon, units of 1/Omega
  int tau_steps = 4000;    // uniform time grid
  double lambda = 0.0;     // bath thermal parameter, in [0, 1)

  /// Cutoff is adequate when the discarded geometric tail lambda^(N+1)
  /// stays below 1e-10.
  bool cutoff_adequate() const;

  /// Smallest adequate cutoff for the given lambda (at least 1).
  static int default_cutoff(double lambda);

  /// Default configuration: adequate cutoff, tau_max = 2, 4000 steps.
  static JCConfig defaults(double lambda);
};

/// Truncated thermal occupation w_n proportional to (1 - lambda) lambda^n,
/// renormalized to sum 1 over n = 0..cutoff. Throws std::domain_error for
/// lambda outside [0, 1).
std::vector<double> bath_weights(double lambda, int cutoff);

/// Reduced memory state after evolving source (x) gamma_B for time tau:
///   r'(tau)  = sum_n w_n [ r cos^2(sqrt(n) tau) + (1-r) sin^2(sqrt(n+1) tau) ]
///   alpha'   = alpha sum_n w_n cos(sqrt(n) tau) cos(sqrt(n+1) tau)
/// with cos(0) = 1. Free-evolution phases are factored out.
/// Throws on tau < 0 or an inadequate cutoff.
QubitState evolve_reduced(const QubitState& source, double tau,
                          const JCConfig& cfg);

/// Holevo information of the paired code
///   {(q/2, rho), (q/2, Z rho Z), ((1-q)/2, rho'), ((1-q)/2, Z rho' Z)},
/// rho' = evolve_reduced(source, tau), maximized over q in [0, 1].
/// Requires ctx.lambda() to match cfg.lambda.
double achieved_capacity(const QubitState& source, double tau,
                         const ThermalContext& ctx, const JCConfig& cfg);

/// Smallest time on the configured grid at which the achieved capacity
/// reaches eta times the capacity of `source`, refined by bisection inside
/// the bracketing step to |delta tau| < 1e-6. Empty when the target is not
/// reached on [0, tau_max].
std::optional<double> time_to_efficiency(const QubitState& source, double eta,
                                         const ThermalContext& ctx,
                                         const JCConfig& cfg);

}  // namespace ticap
