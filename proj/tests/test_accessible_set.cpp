#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "support/test_oracles.hpp"
#include "ticap/accessible_set.hpp"
#include "ticap/entropy.hpp"

using namespace ticap;
using ticap::testing::BlochSampler;

TEST_CASE("interval endpoints and tip") {
  const ThermalContext half = ThermalContext::from_lambda(0.5);
  const AccessibleSet aset(QubitState(0.5, 0.25), half);
  CHECK(aset.s_lo() == doctest::Approx(0.5));
  CHECK(aset.s_hi() == doctest::Approx(0.75));
  CHECK(half.g() >= aset.s_lo());
  CHECK(half.g() <= aset.s_hi());
  CHECK(aset.tip_state().r() == doctest::Approx(0.75));
  CHECK(aset.tip_state().alpha() == Complex(0.0, 0.0));

  // population above Gibbs flips the interval orientation
  const AccessibleSet inverted(QubitState(0.9, 0.0), half);
  CHECK(inverted.s_lo() == doctest::Approx(0.55));
  CHECK(inverted.s_hi() == doctest::Approx(0.9));

  CHECK(AccessibleSet(QubitState(0.0, 0.0), half).tip_state().r() ==
        doctest::Approx(1.0));
  CHECK(AccessibleSet(QubitState(1.0, 0.0), ThermalContext::from_lambda(1.0))
            .tip_state()
            .r() == doctest::Approx(0.0));
}

TEST_CASE("kappa at the interval ends") {
  BlochSampler sampler(21);
  for (int k = 0; k < 40; ++k) {
    const QubitState s = sampler.next();
    const ThermalContext ctx = ThermalContext::from_lambda(sampler.uniform(0.0, 1.0));
    if (std::abs(s.r() - ctx.g()) < 1e-6) {
      continue;
    }
    const AccessibleSet aset(s, ctx);
    CHECK(aset.kappa(s.r()) ==
          doctest::Approx(s.coherence_magnitude()).epsilon(1e-9));
    CHECK(aset.kappa(1.0 - ctx.lambda() * s.r()) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("kappa closed form at zero temperature") {
  // lambda = 0, r = 1/2, |alpha| = 1/2: kappa(s) = |alpha| sqrt((1-s)/(1-r))
  const AccessibleSet aset(QubitState(0.5, 0.5), ThermalContext::from_lambda(0.0));
  const double direct = 0.5 * std::sqrt((1.0 - 0.75) / (1.0 - 0.5));
  CHECK(direct == doctest::Approx(0.35355339059327373).epsilon(1e-15));
  CHECK(aset.kappa(0.75) == doctest::Approx(direct).epsilon(1e-12));

  CHECK_THROWS_AS(aset.kappa(0.25), std::domain_error);
  CHECK_THROWS_AS(aset.kappa(1.25), std::domain_error);
}

TEST_CASE("z conjugation is a sign flip and an involution") {
  CHECK(z_conjugate(QubitState(0.3, 0.0)).alpha() == Complex(0.0, 0.0));
  CHECK(z_conjugate(QubitState(0.5, 0.5)).alpha() == Complex(-0.5, 0.0));
  BlochSampler sampler(22);
  for (int k = 0; k < 30; ++k) {
    const QubitState s = sampler.next();
    const QubitState twice = z_conjugate(z_conjugate(s));
    CHECK(twice.r() == s.r());
    CHECK(twice.alpha() == s.alpha());
    CHECK(von_neumann_entropy(z_conjugate(s)) ==
          doctest::Approx(von_neumann_entropy(s)).epsilon(1e-12));
  }
}

TEST_CASE("membership") {
  const ThermalContext zero = ThermalContext::from_lambda(0.0);
  const QubitState plus(0.5, 0.5);
  const AccessibleSet aset(plus, zero);

  CHECK(aset.contains(plus));
  CHECK(aset.contains(gibbs_state(zero)));
  CHECK_FALSE(aset.contains(QubitState(0.75, 0.4)));  // kappa(0.75) = 0.3536
  CHECK(aset.contains(QubitState(0.75, 0.35)));

  BlochSampler sampler(23);
  for (int k = 0; k < 40; ++k) {
    const QubitState s = sampler.next();
    const ThermalContext ctx = ThermalContext::from_lambda(sampler.uniform(0.0, 1.0));
    const AccessibleSet set(s, ctx);
    CHECK(set.contains(s));
    CHECK(set.contains(gibbs_state(ctx)));
    CHECK(set.contains(set.tip_state()));
  }
}

TEST_CASE("extremal states sit on the boundary") {
  BlochSampler sampler(24);
  for (int k = 0; k < 40; ++k) {
    const QubitState s = sampler.next();
    const ThermalContext ctx = ThermalContext::from_lambda(sampler.uniform(0.0, 0.98));
    if (std::abs(s.r() - ctx.g()) < 1e-6) {
      continue;
    }
    const AccessibleSet aset(s, ctx);

    const QubitState at_source = aset.extremal_state(s.r(), +1);
    CHECK(at_source.r() == doctest::Approx(s.r()).epsilon(1e-12));
    CHECK(std::abs(at_source.alpha() - s.alpha()) < 1e-9);

    const QubitState mirrored = aset.extremal_state(s.r(), -1);
    CHECK(std::abs(mirrored.alpha() - z_conjugate(s).alpha()) < 1e-9);

    const QubitState tip = aset.extremal_state(aset.tip_state().r(), +1);
    CHECK(tip.coherence_magnitude() < 1e-9);

    // boundary states with any phase stay inside
    const double mid = 0.5 * (aset.s_lo() + aset.s_hi());
    const double env = aset.kappa(mid);
    for (double theta : {0.0, 1.1, 2.7, 4.4}) {
      const QubitState cand(mid, env * Complex(std::cos(theta), std::sin(theta)));
      CHECK(aset.contains(cand));
    }
  }
}

TEST_CASE("diagonal sources give a diagonal segment") {
  const ThermalContext ctx = ThermalContext::from_lambda(0.6);
  const AccessibleSet aset(QubitState(0.2, 0.0), ctx);
  const double mid = 0.5 * (aset.s_lo() + aset.s_hi());
  CHECK(aset.kappa(mid) == 0.0);
  CHECK(aset.contains(QubitState(mid, 0.0)));
  CHECK_FALSE(aset.contains(QubitState(mid, 1e-6)));
}

TEST_CASE("reachability nests") {
  BlochSampler sampler(25);
  int checked = 0;
  for (int k = 0; k < 200 && checked < 25; ++k) {
    const QubitState s = sampler.next();
    const ThermalContext ctx = ThermalContext::from_lambda(sampler.uniform(0.0, 0.98));
    if (std::abs(s.r() - ctx.g()) < 1e-3 || s.coherence_magnitude() < 1e-3) {
      continue;
    }
    ++checked;
    const AccessibleSet outer(s, ctx);
    const double span = outer.s_hi() - outer.s_lo();
    for (int b = 1; b <= 4; ++b) {
      const double sb = outer.s_lo() + span * b / 5.0;
      const QubitState boundary = outer.extremal_state(sb, +1);
      if (std::abs(boundary.r() - ctx.g()) < 1e-9) {
        continue;
      }
      const AccessibleSet inner(boundary, ctx);
      for (int j = 0; j <= 10; ++j) {
        const double sj = inner.s_lo() + (inner.s_hi() - inner.s_lo()) * j / 10.0;
        const QubitState probe = inner.extremal_state(sj, (j % 2 == 0) ? +1 : -1);
        CHECK(outer.contains(probe));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("kappa is continuous and nonnegative") {
  BlochSampler sampler(26);
  for (int k = 0; k < 20; ++k) {
    const QubitState s = sampler.next();
    const ThermalContext ctx = ThermalContext::from_lambda(sampler.uniform(0.0, 0.95));
    if (std::abs(s.r() - ctx.g()) < 1e-4) {
      continue;
    }
    const AccessibleSet aset(s, ctx);
    const int n = 400;
    const double step = (aset.s_hi() - aset.s_lo()) / n;
    // kappa^2 is quadratic in s with slope magnitude at most 2 on [0, 1],
    // and |a - b| <= sqrt(|a^2 - b^2|) for nonnegative a, b.
    const double denom = std::abs((ctx.lambda() + 1.0) * s.r() - 1.0);
    const double bound =
        s.coherence_magnitude() * std::sqrt(2.0 * step) / denom + 1e-12;
    double prev = aset.kappa(aset.s_lo());
    for (int j = 1; j <= n; ++j) {
      const double sj = aset.s_lo() + (aset.s_hi() - aset.s_lo()) * j / n;
      const double cur = aset.kappa(sj);
      CHECK(cur >= 0.0);
      CHECK(std::abs(cur - prev) <= bound);
      prev = cur;
    }
  }
}

TEST_CASE("gibbs-population sources use the dephasing segment") {
  const ThermalContext ctx = ThermalContext::from_lambda(0.5);
  const double g = ctx.g();
  const double limit = std::sqrt(g * (1.0 - g));
  const QubitState coherent(g, 0.5 * limit);
  const AccessibleSet aset(coherent, ctx);

  CHECK(aset.gibbs_population());
  CHECK_THROWS_AS(aset.kappa(g), std::domain_error);
  CHECK(aset.contains(coherent));
  CHECK(aset.contains(QubitState(g, 0.25 * limit)));
  CHECK(aset.contains(gibbs_state(ctx)));
  CHECK_FALSE(aset.contains(QubitState(g, 0.8 * limit)));
  CHECK_FALSE(aset.contains(QubitState(g + 0.01, 0.0)));
}
