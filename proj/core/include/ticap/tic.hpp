// Exact thermal information capacity of a qubit memory, via the reduction
// of the code search to a one-dimensional optimization over the average
// ground population of paired extremal codes, plus an independent
// brute-force oracle over discretized codes.

#pragma once

#include "ticap/accessible_set.hpp"
#include "ticap/entropy.hpp"
#include "ticap/states.hpp"

namespace ticap {

/// Capacity plus optimizer witnesses.
struct TICResult {
  double capacity = 0.0;  // bits
  double s_tilde = 0.0;   // optimal average ground population
  double q_star = 0.0;    // weight on the source/Z-conjugate pair
  Code code;              // explicit optimal code (zero-weight entries dropped)
};

/// Pair weight q solving q r + (1 - q)(1 - lambda r) = sbar:
///   q = (sbar + lambda r - 1) / ((1 + lambda) r - 1),
/// clamped into [0, 1]. Throws std::domain_error when r equals the Gibbs
/// population (denominator zero) or sbar lies outside the interval.
double q_of_sbar(double sbar, double r, double lambda);

/// Minimal average codeword entropy at fixed average population sbar:
///   xi(sbar) = q S(rho) + (1 - q) h(1 - lambda r), with q = q_of_sbar.
double xi(double sbar, const QubitState& source, const ThermalContext& ctx);

/// Thermal information capacity of `source`, maximizing
/// h(sbar) - xi(sbar) over the accessible population interval.
///
/// The optimal code is {(q/2, rho), (q/2, Z rho Z), (1-q, tip)}. A source
/// at the Gibbs population is handled as the dephasing-segment limit:
/// capacity h(g) - S(rho) with the two-codeword code {rho, Z rho Z}, and 0
/// for the Gibbs state itself.
TICResult tic(const QubitState& source, const ThermalContext& ctx);

/// Brute-force capacity over codes assembled from a discretized extremal
/// boundary; independent of the one-dimensional reduction used by tic().
///
/// Enumerates, on a grid_n-point population grid:
///   - codes of two Z-symmetric extremal pairs with the pair weight swept
///     at resolution 1/grid_n;
///   - asymmetric two-codeword supports with independent branch signs on a
///     subsampled grid;
///   - asymmetric three-codeword supports on a coarser subsample, weights
///     swept over the probability simplex at resolution 1/grid_n.
/// Requires grid_n >= 3.
double oracle_tic(const QubitState& source, const ThermalContext& ctx,
                  int grid_n);

}  // namespace ticap
