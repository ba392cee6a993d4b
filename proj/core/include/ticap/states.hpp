// Density matrices, qubit states, thermal context and codes.
//
// All states are validated on construction and immutable afterwards, so
// values can be shared freely across threads.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ticap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Construction tolerances for state invariants.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-12;

/// Hermitian, positive semidefinite, trace-one complex matrix.
///
/// Invariants are checked on construction: max element-wise deviation from
/// Hermiticity below 1e-12, |trace - 1| below 1e-12, and all eigenvalues
/// no smaller than -1e-12. Eigenvalues in [-1e-12, 0) are treated as 0 by
/// the entropy functionals.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

 private:
  Matrix entries_;
};

/// General qubit state eta[r, alpha]:
///
///   [ r       alpha ]
///   [ alpha*  1 - r ]
///
/// in the energy basis {|0>, |1>}, with r the ground population and alpha
/// the off-diagonal element. Positivity requires |alpha|^2 <= r (1 - r).
class QubitState {
 public:
  QubitState(double r, Complex alpha);

  double r() const { return r_; }
  Complex alpha() const { return alpha_; }
  double coherence_magnitude() const { return std::abs(alpha_); }

  DensityMatrix to_density_matrix() const;
  static QubitState from_density_matrix(const DensityMatrix& rho);

 private:
  double r_;
  Complex alpha_;
};

/// Dimensionless temperature data for a two-level system with gap
/// delta_E >= 0. Only the Boltzmann ratio lambda = exp(-delta_E / kB T)
/// enters the formalism; the user-facing knob is temp_ratio = kB T / delta_E,
/// with 0 mapping to lambda = 0 and +infinity to lambda = 1.
class ThermalContext {
 public:
  static ThermalContext from_temp_ratio(double temp_ratio);
  static ThermalContext from_lambda(double lambda);

  double lambda() const { return lambda_; }
  /// Ground Gibbs population g = 1 / (1 + lambda), in [1/2, 1].
  double g() const { return g_; }
  double temp_ratio() const { return temp_ratio_; }

 private:
  ThermalContext(double lambda, double temp_ratio);

  double lambda_;
  double g_;
  double temp_ratio_;
};

/// Gibbs state eta[g, 0] of the qubit in the given context.
QubitState gibbs_state(const ThermalContext& ctx);

struct CodeEntry {
  double weight;
  DensityMatrix state;
};

/// Finite ensemble of probability-weighted codeword states, all of the
/// same dimension. Weights are strictly positive and sum to one.
/// A default-constructed Code is empty; entropy functionals reject it.
class Code {
 public:
  Code() = default;
  explicit Code(std::vector<CodeEntry> entries);

  const std::vector<CodeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int dim() const;

  /// Weighted average of the codeword states. Throws when empty.
  DensityMatrix average_state() const;

 private:
  std::vector<CodeEntry> entries_;
};

}  // namespace ticap
