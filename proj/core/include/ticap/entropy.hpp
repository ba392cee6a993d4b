// Entropy and divergence functionals. All results are in bits (log base 2).

#pragma once

#include "ticap/states.hpp"

namespace ticap {

/// h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
/// Throws std::domain_error outside [0, 1].
double binary_entropy(double x);

/// Von Neumann entropy -sum_i e_i log2 e_i over the eigenvalues of rho.
/// Result lies in [0, log2 dim].
double von_neumann_entropy(const DensityMatrix& rho);

/// Closed-form qubit entropy of eta[r, alpha] from its eigenvalues
/// 1/2 +- sqrt((r - 1/2)^2 + |alpha|^2).
double von_neumann_entropy(const QubitState& state);

/// Quantum relative entropy S(rho || sigma) = Tr(rho log2 rho) - Tr(rho log2 sigma).
/// Returns +infinity when the support of rho is not contained in the
/// support of sigma. Throws on dimension mismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Non-equilibrium free energy F(rho) = S(rho || gamma) in bits.
/// The ThermalContext overloads require a qubit input; for other dimensions
/// supply the Gibbs state explicitly.
double free_energy(const DensityMatrix& rho, const ThermalContext& ctx);
double free_energy(const DensityMatrix& rho, const DensityMatrix& gibbs);
double free_energy(const QubitState& state, const ThermalContext& ctx);

/// Relative entropy of coherence in the energy eigenbasis,
/// C(rho) = S(rho || rho_diag) = S(rho_diag) - S(rho).
double relative_entropy_of_coherence(const DensityMatrix& rho);
double relative_entropy_of_coherence(const QubitState& state);

/// Purity measured as log2(dim) - S(rho); in [0, 1] for qubits.
double negentropy(const DensityMatrix& rho);
double negentropy(const QubitState& state);

/// Holevo information of a code:
/// chi = S(sum_k p_k sigma_k) - sum_k p_k S(sigma_k), in [0, log2 dim].
double holevo_information(const Code& code);

}  // namespace ticap
