// Thermodynamic-limit capacity and the type-class code construction that
// realizes it: blocks of energy eigenstates with fixed letter frequencies,
// whose degenerate subspace carries log2-multinomial bits.

#pragma once

#include <vector>

#include "ticap/entropy.hpp"
#include "ticap/states.hpp"

namespace ticap {

/// A frequency-typed block code over a d-level spectrum.
/// Energies are dimensionless (beta E_j); weights w_j are the target letter
/// fractions; freqs are the integer letter counts f_j = round(n w_j), with
/// the rounding leftover assigned to the largest-weight letter so that the
/// counts sum to n.
struct TypeClassCode {
  std::vector<double> energies;
  std::vector<double> weights;
  long long n = 0;
  std::vector<long long> freqs;

  static TypeClassCode make(std::vector<double> energies,
                            std::vector<double> weights, long long n);
};

/// log2 of (sum f)! / prod f_j!, computed with log-gamma.
double log2_multinomial(const std::vector<long long>& freqs);

/// Gibbs letter fractions w_j proportional to exp(-energies[j]).
std::vector<double> gibbs_weights(const std::vector<double>& energies);

/// Limiting rate per unit free energy of a frequency choice w:
///   H(w) / (log2 Z + <E>_w log2 e),  Z = sum_j exp(-E_j).
/// Equals 1 exactly for Gibbs weights and is smaller otherwise.
double limiting_rate_fraction(const std::vector<double>& energies,
                              const std::vector<double>& weights);

/// Encoded bits per consumed source copy for a finite-n type-class code:
///   log2_multinomial(freqs) / m,
/// where m = n sum_j w_j S(|E_j> || gamma) / F and
/// S(|E_j> || gamma) = log2 Z + E_j log2 e.
/// Throws std::invalid_argument unless source_free_energy > 0.
double finite_n_rate(const TypeClassCode& tc, double source_free_energy);

/// Capacity per copy in the thermodynamic limit: the free energy F(rho).
double asymptotic_tic(const DensityMatrix& rho, const ThermalContext& ctx);
double asymptotic_tic(const DensityMatrix& rho, const DensityMatrix& gibbs);
double asymptotic_tic(const QubitState& state, const ThermalContext& ctx);

}  // namespace ticap
