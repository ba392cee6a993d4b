#include "ticap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ticap {

namespace {
const double kLog2E = std::log2(std::exp(1.0));
}

TypeClassCode TypeClassCode::make(std::vector<double> energies,
                                  std::vector<double> weights, long long n) {
  if (energies.empty() || energies.size() != weights.size()) {
    throw std::invalid_argument("TypeClassCode: energies/weights size mismatch");
  }
  if (n < 1) {
    throw std::invalid_argument("TypeClassCode: n must be positive");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12) {
      throw std::invalid_argument("TypeClassCode: negative weight");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("TypeClassCode: weights do not sum to 1");
  }

  std::vector<long long> freqs(weights.size());
  long long assigned = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    freqs[j] = std::llround(static_cast<double>(n) * std::max(0.0, weights[j]));
    assigned += freqs[j];
  }
  // Park the rounding leftover on the heaviest letter.
  const std::size_t heaviest = static_cast<std::size_t>(
      std::max_element(weights.begin(), weights.end()) - weights.begin());
  freqs[heaviest] += n - assigned;
  if (freqs[heaviest] < 0) {
    throw std::invalid_argument("TypeClassCode: rounding produced a negative count");
  }

  TypeClassCode tc;
  tc.energies = std::move(energies);
  tc.weights = std::move(weights);
  tc.n = n;
  tc.freqs = std::move(freqs);
  return tc;
}

double log2_multinomial(const std::vector<long long>& freqs) {
  long long total = 0;
  for (long long f : freqs) {
    if (f < 0) {
      throw std::invalid_argument("log2_multinomial: negative count");
    }
    total += f;
  }
  if (total < 1) {
    throw std::invalid_argument("log2_multinomial: counts sum to zero");
  }
  double log_nat = std::lgamma(static_cast<double>(total) + 1.0);
  for (long long f : freqs) {
    log_nat -= std::lgamma(static_cast<double>(f) + 1.0);
  }
  return std::max(0.0, log_nat * kLog2E);
}

std::vector<double> gibbs_weights(const std::vector<double>& energies) {
  if (energies.empty()) {
    throw std::invalid_argument("gibbs_weights: empty spectrum");
  }
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> w(energies.size());
  double z = 0.0;
  for (std::size_t j = 0; j < energies.size(); ++j) {
    w[j] = std::exp(-(energies[j] - e_min));
    z += w[j];
  }
  for (double& x : w) {
    x /= z;
  }
  return w;
}

double limiting_rate_fraction(const std::vector<double>& energies,
                              const std::vector<double>& weights) {
  if (energies.size() != weights.size() || energies.empty()) {
    throw std::invalid_argument("limiting_rate_fraction: size mismatch");
  }
  double z = 0.0;
  for (double e : energies) {
    z += std::exp(-e);
  }
  double entropy = 0.0;
  double mean_energy = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] > 0.0) {
      entropy -= weights[j] * std::log2(weights[j]);
    }
    mean_energy += weights[j] * energies[j];
  }
  const double denom = std::log2(z) + mean_energy * kLog2E;
  return entropy / denom;
}

double finite_n_rate(const TypeClassCode& tc, double source_free_energy) {
  if (!(source_free_energy > 0.0)) {
    throw std::invalid_argument("finite_n_rate: free energy must be positive");
  }
  double z = 0.0;
  for (double e : tc.energies) {
    z += std::exp(-e);
  }
  const double log2_z = std::log2(z);
  double copies_per_letter = 0.0;
  for (std::size_t j = 0; j < tc.energies.size(); ++j) {
    const double eigen_divergence = log2_z + tc.energies[j] * kLog2E;
    copies_per_letter += tc.weights[j] * eigen_divergence;
  }
  const double m =
      static_cast<double>(tc.n) * copies_per_letter / source_free_energy;
  return log2_multinomial(tc.freqs) / m;
}

double asymptotic_tic(const DensityMatrix& rho, const ThermalContext& ctx) {
  return free_energy(rho, ctx);
}

double asymptotic_tic(const DensityMatrix& rho, const DensityMatrix& gibbs) {
  return free_energy(rho, gibbs);
}

double asymptotic_tic(const QubitState& state, const ThermalContext& ctx) {
  return free_energy(state, ctx);
}

}  // namespace ticap
