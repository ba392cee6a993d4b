#include "ticap/states.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ticap {

namespace {

void check_density_invariants(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (deviation " << herm_dev << ")";
    throw std::invalid_argument(msg.str());
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << trace_dev;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << min_eig;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  check_density_invariants(entries_);
}

QubitState::QubitState(double r, Complex alpha) : r_(r), alpha_(alpha) {
  if (r_ < -1e-12 || r_ > 1.0 + 1e-12) {
    throw std::invalid_argument("QubitState: r outside [0, 1]");
  }
  r_ = std::min(1.0, std::max(0.0, r_));
  const double limit = r_ * (1.0 - r_);
  if (std::norm(alpha_) > limit + 1e-12) {
    std::ostringstream msg;
    msg << "QubitState: |alpha|^2 = " << std::norm(alpha_)
        << " exceeds r(1-r) = " << limit;
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix QubitState::to_density_matrix() const {
  Matrix m(2, 2);
  m(0, 0) = Complex(r_, 0.0);
  m(0, 1) = alpha_;
  m(1, 0) = std::conj(alpha_);
  m(1, 1) = Complex(1.0 - r_, 0.0);
  return DensityMatrix(std::move(m));
}

QubitState QubitState::from_density_matrix(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("QubitState: density matrix is not 2x2");
  }
  return QubitState(rho(0, 0).real(), rho(0, 1));
}

ThermalContext::ThermalContext(double lambda, double temp_ratio)
    : lambda_(lambda), g_(1.0 / (1.0 + lambda)), temp_ratio_(temp_ratio) {}

ThermalContext ThermalContext::from_temp_ratio(double temp_ratio) {
  if (std::isnan(temp_ratio) || temp_ratio < 0.0) {
    throw std::invalid_argument("ThermalContext: temp_ratio must be >= 0");
  }
  if (temp_ratio == 0.0) {
    return ThermalContext(0.0, 0.0);
  }
  if (std::isinf(temp_ratio)) {
    return ThermalContext(1.0, temp_ratio);
  }
  return ThermalContext(std::exp(-1.0 / temp_ratio), temp_ratio);
}

ThermalContext ThermalContext::from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("ThermalContext: lambda must be in [0, 1]");
  }
  double temp_ratio;
  if (lambda == 0.0) {
    temp_ratio = 0.0;
  } else if (lambda == 1.0) {
    temp_ratio = std::numeric_limits<double>::infinity();
  } else {
    temp_ratio = -1.0 / std::log(lambda);
  }
  return ThermalContext(lambda, temp_ratio);
}

QubitState gibbs_state(const ThermalContext& ctx) {
  return QubitState(ctx.g(), Complex(0.0, 0.0));
}

Code::Code(std::vector<CodeEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("Code: empty codeword list");
  }
  const int d = entries_.front().state.dim();
  double total = 0.0;
  for (const auto& e : entries_) {
    if (e.weight <= 0.0) {
      throw std::invalid_argument("Code: weights must be positive");
    }
    if (e.state.dim() != d) {
      throw std::invalid_argument("Code: mixed codeword dimensions");
    }
    total += e.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("Code: weights do not sum to 1");
  }
}

int Code::dim() const {
  if (entries_.empty()) {
    throw std::invalid_argument("Code: empty code has no dimension");
  }
  return entries_.front().state.dim();
}

DensityMatrix Code::average_state() const {
  Matrix avg = Matrix::Zero(dim(), dim());
  for (const auto& e : entries_) {
    avg += e.weight * e.state.matrix();
  }
  return DensityMatrix(std::move(avg));
}

}  // namespace ticap
