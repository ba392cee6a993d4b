#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "support/jc_dense_oracle.hpp"
#include "support/test_oracles.hpp"
#include "ticap/accessible_set.hpp"
#include "ticap/entropy.hpp"
#include "ticap/jaynes_cummings.hpp"
#include "ticap/tic.hpp"

using namespace ticap;
using ticap::testing::BlochSampler;
using ticap::testing::jc_dense_evolve;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Achieved capacity recomputed from scratch: dense evolution plus a fine
// sweep of the pair-code Holevo objective.
double achieved_reference(const QubitState& source, double tau,
                          const std::vector<double>& weights, int bath_levels) {
  const QubitState evolved = jc_dense_evolve(source, tau, weights, bath_levels);
  const double s0 = ticap::testing::entropy_2x2(source.r(), source.alpha());
  const double s1 = ticap::testing::entropy_2x2(evolved.r(), evolved.alpha());
  double best = 0.0;
  const int n = 8000;
  for (int k = 0; k <= n; ++k) {
    const double q = static_cast<double>(k) / n;
    const double mean = q * source.r() + (1.0 - q) * evolved.r();
    const double chi = ticap::testing::h2(mean) - q * s0 - (1.0 - q) * s1;
    best = std::max(best, chi);
  }
  return best;
}
}  // namespace

TEST_CASE("bath weights") {
  const auto vacuum = bath_weights(0.0, 4);
  CHECK(vacuum[0] == 1.0);
  for (int n = 1; n <= 4; ++n) {
    CHECK(vacuum[n] == 0.0);
  }

  const auto truncated = bath_weights(0.5, 2);
  CHECK(truncated[0] == doctest::Approx(4.0 / 7.0).epsilon(1e-14));
  CHECK(truncated[1] == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(truncated[2] == doctest::Approx(1.0 / 7.0).epsilon(1e-14));

  for (double lambda : {0.0, 0.2, 0.77}) {
    const auto w = bath_weights(lambda, 12);
    double total = 0.0;
    for (double x : w) {
      total += x;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  }

  CHECK_THROWS_AS(bath_weights(1.0, 5), std::domain_error);
  CHECK_THROWS_AS(bath_weights(-0.1, 5), std::domain_error);
  CHECK_THROWS_AS(bath_weights(0.5, -1), std::invalid_argument);
}

TEST_CASE("cutoff selection tracks the geometric tail") {
  CHECK(JCConfig::default_cutoff(0.0) == 1);
  CHECK(JCConfig::default_cutoff(0.5) == 33);
  for (double lambda : {0.1, 0.35, 0.6, 0.85}) {
    const int n = JCConfig::default_cutoff(lambda);
    CHECK(std::pow(lambda, n + 1) < 1e-10);
    CHECK(std::pow(lambda, n) >= 1e-10);
    CHECK(JCConfig::defaults(lambda).cutoff_adequate());
  }
  JCConfig skimpy = JCConfig::defaults(0.5);
  skimpy.fock_cutoff = 3;
  CHECK_FALSE(skimpy.cutoff_adequate());
  CHECK_THROWS_AS(evolve_reduced(QubitState(0.5, 0.0), 0.1, skimpy),
                  std::invalid_argument);
}

TEST_CASE("evolution fixes tau = 0 and inverts the vacuum at pi/2") {
  BlochSampler sampler(51);
  for (int k = 0; k < 20; ++k) {
    const QubitState s = sampler.next();
    const JCConfig cfg = JCConfig::defaults(0.3);
    const QubitState same = evolve_reduced(s, 0.0, cfg);
    CHECK(same.r() == doctest::Approx(s.r()).epsilon(1e-14));
    CHECK(std::abs(same.alpha() - s.alpha()) < 1e-14);
  }

  const JCConfig vacuum = JCConfig::defaults(0.0);
  const QubitState inverted =
      evolve_reduced(QubitState(0.0, 0.0), kPi / 2.0, vacuum);
  CHECK(inverted.r() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(evolve_reduced(QubitState(0.5, 0.0), -0.1, vacuum),
                  std::invalid_argument);
}

TEST_CASE("zero-temperature closed form") {
  const JCConfig cfg = JCConfig::defaults(0.0);
  BlochSampler sampler(52);
  for (int k = 0; k < 10; ++k) {
    const double r = sampler.uniform(0.0, 1.0);
    for (double tau : {0.1, 0.4, 0.9, 1.5, 2.0}) {
      const QubitState out = evolve_reduced(QubitState(r, 0.0), tau, cfg);
      const double expected = r + (1.0 - r) * std::sin(tau) * std::sin(tau);
      CHECK(out.r() == doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // ground state of the vacuum block never moves
  for (double tau : {0.3, 1.1, 1.9}) {
    CHECK(evolve_reduced(QubitState(1.0, 0.0), tau, cfg).r() ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("dense matrix exponential reproduces the block solution") {
  // vacuum bath on a cutoff-3 joint space
  {
    JCConfig cfg = JCConfig::defaults(0.0);
    cfg.fock_cutoff = 3;
    const auto weights = bath_weights(0.0, 3);
    BlochSampler sampler(53);
    for (int k = 0; k < 12; ++k) {
      const QubitState s = sampler.next();
      for (double tau : {0.0, 0.2, 0.7, 1.3, 1.9}) {
        const QubitState block = evolve_reduced(s, tau, cfg);
        const QubitState dense = jc_dense_evolve(s, tau, weights, 4);
        CHECK(std::abs(block.r() - dense.r()) < 1e-8);
        CHECK(std::abs(block.alpha() - dense.alpha()) < 1e-8);
      }
    }
  }
  // thermal bath, oracle space one level deeper than the truncation
  for (double lambda : {0.3, 0.55}) {
    const JCConfig cfg = JCConfig::defaults(lambda);
    const auto weights = bath_weights(lambda, cfg.fock_cutoff);
    BlochSampler sampler(54);
    for (int k = 0; k < 4; ++k) {
      const QubitState s = sampler.next();
      for (double tau : {0.15, 0.8, 1.7}) {
        const QubitState block = evolve_reduced(s, tau, cfg);
        const QubitState dense =
            jc_dense_evolve(s, tau, weights, cfg.fock_cutoff + 2);
        CHECK(std::abs(block.r() - dense.r()) < 1e-10);
        CHECK(std::abs(block.alpha() - dense.alpha()) < 1e-10);
      }
    }
  }
}

TEST_CASE("evolution preserves state validity") {
  BlochSampler sampler(55);
  for (double lambda : {0.0, 0.25, 0.6}) {
    const JCConfig cfg = JCConfig::defaults(lambda);
    for (int k = 0; k < 6; ++k) {
      const QubitState s = sampler.next();
      for (int j = 0; j <= 40; ++j) {
        const double tau = 2.0 * j / 40.0;
        const QubitState out = evolve_reduced(s, tau, cfg);
        CHECK(out.r() >= -1e-10);
        CHECK(out.r() <= 1.0 + 1e-10);
        CHECK(std::norm(out.alpha()) <= out.r() * (1.0 - out.r()) + 1e-10);
      }
    }
  }
}

TEST_CASE("achieved capacity at reference points") {
  const ThermalContext zero = ThermalContext::from_lambda(0.0);
  const JCConfig cfg = JCConfig::defaults(0.0);

  // before any interaction the third codeword is redundant
  BlochSampler sampler(56);
  for (int k = 0; k < 10; ++k) {
    const QubitState s = sampler.next();
    const double chi0 = achieved_capacity(s, 0.0, zero, cfg);
    const double pair_only = binary_entropy(s.r()) - von_neumann_entropy(s);
    CHECK(chi0 == doctest::Approx(std::max(0.0, pair_only)).epsilon(1e-10));
    CHECK(chi0 <= tic(s, zero).capacity + 1e-9);
  }

  // full vacuum inversion reaches the optimum exactly
  const QubitState excited(0.0, 0.0);
  CHECK(achieved_capacity(excited, kPi / 2.0, zero, cfg) ==
        doctest::Approx(tic(excited, zero).capacity).epsilon(1e-10));

  const ThermalContext mismatched = ThermalContext::from_lambda(0.5);
  CHECK_THROWS_AS(achieved_capacity(excited, 0.5, mismatched, cfg),
                  std::invalid_argument);
}

TEST_CASE("achieved capacity never exceeds the optimum") {
  BlochSampler sampler(57);
  for (double lambda : {0.0, 0.35}) {
    const ThermalContext ctx = ThermalContext::from_lambda(lambda);
    const JCConfig cfg = JCConfig::defaults(lambda);
    for (int k = 0; k < 5; ++k) {
      const QubitState s = sampler.next();
      const double cap = tic(s, ctx).capacity;
      const AccessibleSet aset(s, ctx);
      for (int j = 0; j <= 50; ++j) {
        const double tau = 2.0 * j / 50.0;
        CHECK(achieved_capacity(s, tau, ctx, cfg) <= cap + 1e-9);
        if (!aset.gibbs_population()) {
          CHECK(aset.contains(evolve_reduced(s, tau, cfg)));
        }
      }
    }
  }
}

TEST_CASE("achieved capacity is grid-continuous but not monotone") {
  const ThermalContext ctx = ThermalContext::from_lambda(0.4);
  const JCConfig cfg = JCConfig::defaults(0.4);
  const QubitState source(0.0, 0.0);
  const int n = 400;
  std::vector<double> curve(n + 1);
  for (int k = 0; k <= n; ++k) {
    curve[k] = achieved_capacity(source, 2.0 * k / n, ctx, cfg);
  }
  bool dips = false;
  for (int k = 1; k <= n; ++k) {
    CHECK(std::abs(curve[k] - curve[k - 1]) < 0.02);
    if (curve[k] < curve[k - 1] - 1e-6) {
      dips = true;
    }
  }
  CHECK(dips);  // Rabi recurrences make the curve non-monotone
}

TEST_CASE("achieved capacity matches the dense reference") {
  for (double lambda : {0.0, 0.4}) {
    const ThermalContext ctx = ThermalContext::from_lambda(lambda);
    const JCConfig cfg = JCConfig::defaults(lambda);
    const auto weights = bath_weights(lambda, cfg.fock_cutoff);
    const QubitState source(0.1, Complex(0.2, 0.1));
    for (double tau : {0.3, 0.9, 1.6}) {
      const double lib = achieved_capacity(source, tau, ctx, cfg);
      const double ref =
          achieved_reference(source, tau, weights, cfg.fock_cutoff + 2);
      CHECK(lib == doctest::Approx(ref).epsilon(1e-7));
    }
  }
}

TEST_CASE("time to efficiency") {
  const ThermalContext zero = ThermalContext::from_lambda(0.0);
  const JCConfig cfg = JCConfig::defaults(0.0);
  const QubitState excited(0.0, 0.0);

  CHECK_THROWS_AS(time_to_efficiency(excited, 0.0, zero, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(time_to_efficiency(excited, 1.2, zero, cfg),
                  std::invalid_argument);

  // a coherent source starts with positive capacity, so tiny targets are
  // met immediately
  const QubitState coherent(0.3, Complex(0.2, 0.0));
  const auto immediate = time_to_efficiency(coherent, 1e-6, zero, cfg);
  REQUIRE(immediate.has_value());
  CHECK(*immediate == 0.0);

  // the 0.999 crossing for the pure excited state: pin the expectation with
  // the dense reference before comparing
  const double target = 0.999 * tic(excited, zero).capacity;
  const auto weights = bath_weights(0.0, cfg.fock_cutoff);
  double lo = 0.0, hi = kPi / 2.0;
  REQUIRE(achieved_reference(excited, hi, weights, cfg.fock_cutoff + 2) >= target);
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    if (achieved_reference(excited, mid, weights, cfg.fock_cutoff + 2) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const auto star = time_to_efficiency(excited, 0.999, zero, cfg);
  REQUIRE(star.has_value());
  CHECK(*star == doctest::Approx(hi).epsilon(2e-5));
  // the capacity threshold is crossed before the full inversion time
  CHECK(*star < kPi / 2.0);
  CHECK(*star > 1.5);

  // monotone in the target
  const auto mid_star = time_to_efficiency(excited, 0.5, zero, cfg);
  REQUIRE(mid_star.has_value());
  CHECK(*mid_star <= *star);

  // an unreachable target reports absence
  const ThermalContext warm = ThermalContext::from_lambda(0.3);
  const JCConfig warm_cfg = JCConfig::defaults(0.3);
  const auto missing = time_to_efficiency(excited, 0.999, warm, warm_cfg);
  CHECK_FALSE(missing.has_value());
  double peak = 0.0;
  for (int j = 0; j <= 200; ++j) {
    peak = std::max(peak,
                    achieved_capacity(excited, 2.0 * j / 200.0, warm, warm_cfg));
  }
  CHECK(peak < 0.999 * tic(excited, warm).capacity);
}
