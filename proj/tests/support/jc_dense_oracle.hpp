// Dense matrix-exponential reference for the Jaynes-Cummings evolution:
// build the interaction Hamiltonian on memory (x) truncated bath, take the
// exact unitary through an eigendecomposition, and partial-trace the bath.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ticap/states.hpp"

namespace ticap::testing {

// Reduced memory state of U (rho x diag(bath_pop)) U^dagger with
// U = exp(-i tau H_I), H_I = |1><0| b + |0><1| b^dagger on bath levels
// 0..bath_levels-1. bath_pop may be shorter than bath_levels; missing
// entries are zero.
inline QubitState jc_dense_evolve(const QubitState& source, double tau,
                                  const std::vector<double>& bath_pop,
                                  int bath_levels) {
  using Eigen::MatrixXcd;
  using Eigen::VectorXcd;
  const std::complex<double> i_unit(0.0, 1.0);
  const int nb = bath_levels;
  const int dim = 2 * nb;
  const auto idx = [nb](int memory, int boson) { return memory * nb + boson; };

  MatrixXcd ham = MatrixXcd::Zero(dim, dim);
  for (int n = 0; n + 1 < nb; ++n) {
    const double coupling = std::sqrt(static_cast<double>(n + 1));
    ham(idx(1, n), idx(0, n + 1)) = coupling;  // |1,n><0,n+1| from b
    ham(idx(0, n + 1), idx(1, n)) = coupling;
  }

  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(ham);
  const MatrixXcd& vec = solver.eigenvectors();
  VectorXcd phases(dim);
  for (int k = 0; k < dim; ++k) {
    phases[k] = std::exp(-i_unit * tau * solver.eigenvalues()[k]);
  }
  const MatrixXcd unitary = vec * phases.asDiagonal() * vec.adjoint();

  MatrixXcd joint = MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < nb && n < static_cast<int>(bath_pop.size()); ++n) {
    const double w = bath_pop[n];
    joint(idx(0, n), idx(0, n)) = w * source.r();
    joint(idx(1, n), idx(1, n)) = w * (1.0 - source.r());
    joint(idx(0, n), idx(1, n)) = w * source.alpha();
    joint(idx(1, n), idx(0, n)) = w * std::conj(source.alpha());
  }

  const MatrixXcd evolved = unitary * joint * unitary.adjoint();

  std::complex<double> r_out(0.0, 0.0), alpha_out(0.0, 0.0);
  for (int n = 0; n < nb; ++n) {
    r_out += evolved(idx(0, n), idx(0, n));
    alpha_out += evolved(idx(0, n), idx(1, n));
  }
  return QubitState(r_out.real(), alpha_out);
}

}  // namespace ticap::testing
