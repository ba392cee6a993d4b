#include "ticap/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ticap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x log2 x with the 0 log 0 = 0 convention; eigenvalues in [-1e-12, 0)
// are clamped to 0.
double xlog2x(double x) {
  if (x < kEigenvalueFloor) {
    throw std::invalid_argument("entropy: eigenvalue below -1e-12");
  }
  if (x <= 0.0) {
    return 0.0;
  }
  return x * std::log2(x);
}

Eigen::VectorXd eigenvalues_of(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  }
  if (x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd evs = eigenvalues_of(rho);
  double s = 0.0;
  for (int i = 0; i < evs.size(); ++i) {
    s -= xlog2x(evs[i]);
  }
  return std::max(0.0, s);
}

double von_neumann_entropy(const QubitState& state) {
  const double dev = std::hypot(state.r() - 0.5, state.coherence_magnitude());
  const double t = std::max(0.0, 0.5 - dev);
  return binary_entropy(t);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }

  double tr_rho_log_rho = 0.0;
  const Eigen::VectorXd p = eigenvalues_of(rho);
  for (int i = 0; i < p.size(); ++i) {
    tr_rho_log_rho += xlog2x(p[i]);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(sigma.matrix());
  const Eigen::VectorXd q = solver.eigenvalues();
  const Matrix v = solver.eigenvectors();

  // Population of rho along each eigenvector of sigma.
  double tr_rho_log_sigma = 0.0;
  for (int j = 0; j < q.size(); ++j) {
    const double mass =
        std::max(0.0, (v.col(j).adjoint() * rho.matrix() * v.col(j))(0, 0).real());
    if (q[j] <= 1e-12) {
      if (mass > 1e-10) {
        return kInf;  // support of rho leaks outside support of sigma
      }
      continue;
    }
    tr_rho_log_sigma += mass * std::log2(q[j]);
  }

  const double result = tr_rho_log_rho - tr_rho_log_sigma;
  return result < 0.0 ? 0.0 : result;
}

double free_energy(const DensityMatrix& rho, const ThermalContext& ctx) {
  if (rho.dim() != 2) {
    throw std::invalid_argument(
        "free_energy: supply an explicit Gibbs state for dim != 2");
  }
  return relative_entropy(rho, gibbs_state(ctx).to_density_matrix());
}

double free_energy(const DensityMatrix& rho, const DensityMatrix& gibbs) {
  return relative_entropy(rho, gibbs);
}

double free_energy(const QubitState& state, const ThermalContext& ctx) {
  return free_energy(state.to_density_matrix(), ctx);
}

double relative_entropy_of_coherence(const DensityMatrix& rho) {
  bool diagonal = true;
  double diag_entropy = 0.0;
  for (int i = 0; i < rho.dim() && diagonal; ++i) {
    for (int j = 0; j < rho.dim(); ++j) {
      if (i != j && std::abs(rho(i, j)) != 0.0) {
        diagonal = false;
        break;
      }
    }
  }
  if (diagonal) {
    return 0.0;
  }
  for (int i = 0; i < rho.dim(); ++i) {
    diag_entropy -= xlog2x(std::max(0.0, rho(i, i).real()));
  }
  return std::max(0.0, diag_entropy - von_neumann_entropy(rho));
}

double relative_entropy_of_coherence(const QubitState& state) {
  if (state.coherence_magnitude() == 0.0) {
    return 0.0;
  }
  return std::max(0.0,
                  binary_entropy(state.r()) - von_neumann_entropy(state));
}

double negentropy(const DensityMatrix& rho) {
  return std::max(0.0, std::log2(static_cast<double>(rho.dim())) -
                           von_neumann_entropy(rho));
}

double negentropy(const QubitState& state) {
  return std::max(0.0, 1.0 - von_neumann_entropy(state));
}

double holevo_information(const Code& code) {
  if (code.empty()) {
    throw std::invalid_argument("holevo_information: empty code");
  }
  double avg_entropy = 0.0;
  for (const auto& e : code.entries()) {
    avg_entropy += e.weight * von_neumann_entropy(e.state);
  }
  return std::max(0.0, von_neumann_entropy(code.average_state()) - avg_entropy);
}

}  // namespace ticap
