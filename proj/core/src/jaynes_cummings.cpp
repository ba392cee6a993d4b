#include "ticap/jaynes_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ticap/entropy.hpp"
#include "ticap/optimize.hpp"
#include "ticap/tic.hpp"

namespace ticap {

namespace {
constexpr double kTailBound = 1e-10;

double h_safe(double x) {
  if (x <= 0.0 || x >= 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}
}  // namespace

bool JCConfig::cutoff_adequate() const {
  if (lambda == 0.0) {
    return fock_cutoff >= 1;
  }
  return fock_cutoff >= 1 &&
         std::pow(lambda, fock_cutoff + 1) < kTailBound;
}

int JCConfig::default_cutoff(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::domain_error("JCConfig: lambda must be in [0, 1)");
  }
  if (lambda == 0.0) {
    return 1;
  }
  const int n = static_cast<int>(
      std::ceil(std::log(kTailBound) / std::log(lambda) - 1.0));
  return std::max(1, n);
}

JCConfig JCConfig::defaults(double lambda) {
  JCConfig cfg;
  cfg.fock_cutoff = default_cutoff(lambda);
  cfg.tau_max = 2.0;
  cfg.tau_steps = 4000;
  cfg.lambda = lambda;
  return cfg;
}

std::vector<double> bath_weights(double lambda, int cutoff) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::domain_error("bath_weights: lambda must be in [0, 1)");
  }
  if (cutoff < 0) {
    throw std::invalid_argument("bath_weights: negative cutoff");
  }
  std::vector<double> w(cutoff + 1, 0.0);
  if (lambda == 0.0) {
    w[0] = 1.0;
    return w;
  }
  double total = 0.0;
  double term = 1.0 - lambda;  // (1 - lambda) lambda^n, n = 0
  for (int n = 0; n <= cutoff; ++n) {
    w[n] = term;
    total += term;
    term *= lambda;
  }
  for (double& x : w) {
    x /= total;  // fold the discarded tail back in proportionally
  }
  return w;
}

QubitState evolve_reduced(const QubitState& source, double tau,
                          const JCConfig& cfg) {
  if (tau < 0.0) {
    throw std::invalid_argument("evolve_reduced: tau must be >= 0");
  }
  if (!cfg.cutoff_adequate()) {
    throw std::invalid_argument(
        "evolve_reduced: fock_cutoff too small for this lambda");
  }
  const std::vector<double> w = bath_weights(cfg.lambda, cfg.fock_cutoff);
  const double r = source.r();

  double r_out = 0.0;
  double overlap = 0.0;
  for (int n = 0; n <= cfg.fock_cutoff; ++n) {
    const double cn = std::cos(std::sqrt(static_cast<double>(n)) * tau);
    const double sn1 = std::sin(std::sqrt(static_cast<double>(n + 1)) * tau);
    const double cn1 = std::cos(std::sqrt(static_cast<double>(n + 1)) * tau);
    r_out += w[n] * (r * cn * cn + (1.0 - r) * sn1 * sn1);
    overlap += w[n] * cn * cn1;
  }
  return QubitState(r_out, source.alpha() * overlap);
}

double achieved_capacity(const QubitState& source, double tau,
                         const ThermalContext& ctx, const JCConfig& cfg) {
  if (std::abs(ctx.lambda() - cfg.lambda) > 1e-9) {
    throw std::invalid_argument(
        "achieved_capacity: ThermalContext and JCConfig lambda differ");
  }
  const QubitState evolved = evolve_reduced(source, tau, cfg);
  const double r0 = source.r();
  const double r1 = evolved.r();
  const double s0 = von_neumann_entropy(source);
  const double s1 = von_neumann_entropy(evolved);

  // chi of {(q/2, rho), (q/2, ZrhoZ), ((1-q)/2, rho'), ((1-q)/2, Zrho'Z)}:
  // the pairing cancels all coherences in the ensemble average.
  const auto objective = [&](double q) {
    return h_safe(q * r0 + (1.0 - q) * r1) - q * s0 - (1.0 - q) * s1;
  };
  return std::max(0.0, maximize_on_interval(objective, 0.0, 1.0).value);
}

std::optional<double> time_to_efficiency(const QubitState& source, double eta,
                                         const ThermalContext& ctx,
                                         const JCConfig& cfg) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("time_to_efficiency: eta must be in (0, 1]");
  }
  const double target = eta * tic(source, ctx).capacity;
  const auto reaches = [&](double tau) {
    return achieved_capacity(source, tau, ctx, cfg) >= target - 1e-12;
  };

  const double step = cfg.tau_max / cfg.tau_steps;
  for (int k = 0; k <= cfg.tau_steps; ++k) {
    const double tau = k * step;
    if (!reaches(tau)) {
      continue;
    }
    if (k == 0) {
      return 0.0;
    }
    double lo = tau - step;
    double hi = tau;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      if (reaches(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  }
  return std::nullopt;
}

}  // namespace ticap
