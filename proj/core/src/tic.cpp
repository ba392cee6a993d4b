#include "ticap/tic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ticap/optimize.hpp"

namespace ticap {

namespace {

constexpr double kDegenerateTol = 1e-12;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Entropy of eta[m, a] through the qubit eigenvalue 1/2 - sqrt(...),
// tolerant of slightly out-of-range arguments produced by grid arithmetic.
double pair_entropy(double m, double a) {
  const double dev = std::sqrt((m - 0.5) * (m - 0.5) + a * a);
  const double t = 0.5 - dev;
  if (t <= 0.0) {
    return 0.0;
  }
  return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

double h_safe(double x) {
  if (x <= 0.0 || x >= 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace

double q_of_sbar(double sbar, double r, double lambda) {
  const double denom = (1.0 + lambda) * r - 1.0;
  if (std::abs(denom) < kDegenerateTol) {
    throw std::domain_error("q_of_sbar: source population equals the Gibbs value");
  }
  const double lo = std::min(r, 1.0 - lambda * r);
  const double hi = std::max(r, 1.0 - lambda * r);
  if (sbar < lo - 1e-9 || sbar > hi + 1e-9) {
    throw std::domain_error("q_of_sbar: sbar outside the accessible interval");
  }
  return clamp01((sbar + lambda * r - 1.0) / denom);
}

double xi(double sbar, const QubitState& source, const ThermalContext& ctx) {
  const double q = q_of_sbar(sbar, source.r(), ctx.lambda());
  const double tip_entropy =
      binary_entropy(clamp01(1.0 - ctx.lambda() * source.r()));
  return q * von_neumann_entropy(source) + (1.0 - q) * tip_entropy;
}

TICResult tic(const QubitState& source, const ThermalContext& ctx) {
  const double r = source.r();
  const double lambda = ctx.lambda();
  const double g = ctx.g();

  if (std::abs(r - g) < kDegenerateTol) {
    const double mag = source.coherence_magnitude();
    if (mag < kDegenerateTol) {
      // Gibbs state: nothing is reachable, capacity zero.
      TICResult res;
      res.capacity = 0.0;
      res.s_tilde = g;
      res.q_star = 1.0;
      res.code = Code({{1.0, source.to_density_matrix()}});
      return res;
    }
    // Dephasing-segment limit: the best code is the source and its Z mirror.
    TICResult res;
    res.capacity =
        std::max(0.0, binary_entropy(g) - von_neumann_entropy(source));
    res.s_tilde = g;
    res.q_star = 1.0;
    res.code = Code({{0.5, source.to_density_matrix()},
                     {0.5, z_conjugate(source).to_density_matrix()}});
    return res;
  }

  const double s_lo = std::min(r, 1.0 - lambda * r);
  const double s_hi = std::max(r, 1.0 - lambda * r);
  const double source_entropy = von_neumann_entropy(source);
  const double tip_population = clamp01(1.0 - lambda * r);
  const double tip_entropy = binary_entropy(tip_population);
  const double denom = (1.0 + lambda) * r - 1.0;

  const auto objective = [&](double sbar) {
    const double q = clamp01((sbar + lambda * r - 1.0) / denom);
    return h_safe(sbar) - q * source_entropy - (1.0 - q) * tip_entropy;
  };

  const ScalarMax best = maximize_on_interval(objective, s_lo, s_hi);
  const double q_star = clamp01((best.x + lambda * r - 1.0) / denom);

  std::vector<CodeEntry> entries;
  if (q_star > kDegenerateTol) {
    entries.push_back({q_star / 2.0, source.to_density_matrix()});
    entries.push_back({q_star / 2.0, z_conjugate(source).to_density_matrix()});
  }
  if (1.0 - q_star > kDegenerateTol) {
    entries.push_back(
        {1.0 - q_star,
         QubitState(tip_population, Complex(0.0, 0.0)).to_density_matrix()});
  }

  TICResult res;
  res.capacity = std::max(0.0, best.value);
  res.s_tilde = best.x;
  res.q_star = q_star;
  res.code = Code(std::move(entries));
  return res;
}

double oracle_tic(const QubitState& source, const ThermalContext& ctx,
                  int grid_n) {
  if (grid_n < 3) {
    throw std::invalid_argument("oracle_tic: grid_n must be >= 3");
  }
  const double r = source.r();
  const double lambda = ctx.lambda();
  const double g = ctx.g();
  const double mag = source.coherence_magnitude();

  if (std::abs(r - g) < kDegenerateTol) {
    if (mag < kDegenerateTol) {
      return 0.0;
    }
    // Dephasing segment: paired codes {eta[g, +c], eta[g, -c]} on a c grid.
    double best = 0.0;
    const double hg = h_safe(g);
    for (int k = 0; k < grid_n; ++k) {
      const double c = mag * static_cast<double>(k) / (grid_n - 1);
      best = std::max(best, hg - pair_entropy(g, c));
    }
    return best;
  }

  const double s_lo = std::min(r, 1.0 - lambda * r);
  const double s_hi = std::max(r, 1.0 - lambda * r);
  const double denom = std::abs((lambda + 1.0) * r - 1.0);

  std::vector<double> s(grid_n), kap(grid_n), ent(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    s[i] = s_lo + (s_hi - s_lo) * static_cast<double>(i) / (grid_n - 1);
    const double product = (lambda * s[i] + r - 1.0) * (lambda * r + s[i] - 1.0);
    kap[i] = mag * std::sqrt(std::abs(product)) / denom;
    ent[i] = pair_entropy(s[i], kap[i]);
  }

  double best = 0.0;

  // Two Z-symmetric pairs at populations (s_i, s_j); the coherences cancel
  // in the average, so the ensemble state is diagonal.
  for (int i = 0; i < grid_n; ++i) {
    for (int j = i; j < grid_n; ++j) {
      for (int k = 0; k <= grid_n; ++k) {
        const double w = static_cast<double>(k) / grid_n;
        const double chi =
            h_safe(w * s[i] + (1.0 - w) * s[j]) - w * ent[i] - (1.0 - w) * ent[j];
        if (chi > best) {
          best = chi;
        }
      }
    }
  }

  // Asymmetric two-codeword supports with independent branch signs.
  {
    std::vector<int> sub;
    const int count = std::min(grid_n, 41);
    for (int k = 0; k < count; ++k) {
      sub.push_back(static_cast<int>(
          std::lround(static_cast<double>(k) * (grid_n - 1) / (count - 1))));
    }
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (std::size_t a = 0; a < sub.size(); ++a) {
      for (std::size_t b = a; b < sub.size(); ++b) {
        const int i = sub[a];
        const int j = sub[b];
        for (const double sg : {1.0, -1.0}) {
          for (int k = 0; k <= grid_n; ++k) {
            const double w = static_cast<double>(k) / grid_n;
            const double mr = w * s[i] + (1.0 - w) * s[j];
            const double ma = std::abs(w * kap[i] + (1.0 - w) * sg * kap[j]);
            const double chi =
                pair_entropy(mr, ma) - w * ent[i] - (1.0 - w) * ent[j];
            if (chi > best) {
              best = chi;
            }
          }
        }
      }
    }
  }

  // Asymmetric three-codeword supports on a coarser subsample; weights
  // sweep the full simplex at resolution 1/grid_n.
  {
    std::vector<int> sub;
    const int count = std::min(grid_n, 10);
    for (int k = 0; k < count; ++k) {
      sub.push_back(static_cast<int>(
          std::lround(static_cast<double>(k) * (grid_n - 1) / (count - 1))));
    }
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    static const double kSigns[4][3] = {
        {1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    for (std::size_t a = 0; a + 2 < sub.size(); ++a) {
      for (std::size_t b = a + 1; b + 1 < sub.size(); ++b) {
        for (std::size_t c = b + 1; c < sub.size(); ++c) {
          const int i = sub[a];
          const int j = sub[b];
          const int l = sub[c];
          for (const auto& sg : kSigns) {
            for (int k1 = 0; k1 <= grid_n; ++k1) {
              const double w1 = static_cast<double>(k1) / grid_n;
              for (int k2 = 0; k2 <= grid_n - k1; ++k2) {
                const double w2 = static_cast<double>(k2) / grid_n;
                const double w3 = 1.0 - w1 - w2;
                const double mr = w1 * s[i] + w2 * s[j] + w3 * s[l];
                const double ma = std::abs(sg[0] * w1 * kap[i] +
                                           sg[1] * w2 * kap[j] +
                                           sg[2] * w3 * kap[l]);
                const double chi = pair_entropy(mr, ma) - w1 * ent[i] -
                                   w2 * ent[j] - w3 * ent[l];
                if (chi > best) {
                  best = chi;
                }
              }
            }
          }
        }
      }
    }
  }

  return best;
}

}  // namespace ticap
