// Scalar maximization on a closed interval: uniform pre-scan to bracket the
// maximum, then golden-section refinement. Ties in the pre-scan resolve to
// the smallest abscissa, which keeps results reproducible.

#pragma once

#include <cmath>
#include <utility>

namespace ticap {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
};

template <class F>
ScalarMax maximize_on_interval(F&& f, double lo, double hi, int prescan = 2001,
                               double xtol = 1e-10) {
  if (!(hi > lo)) {
    return {lo, f(lo)};
  }

  const double step = (hi - lo) / (prescan - 1);
  int best_k = 0;
  double best_v = f(lo);
  for (int k = 1; k < prescan; ++k) {
    const double v = f(lo + k * step);
    if (v > best_v) {
      best_v = v;
      best_k = k;
    }
  }

  double a = lo + (best_k > 0 ? (best_k - 1) * step : 0.0);
  double b = (best_k < prescan - 1) ? lo + (best_k + 1) * step : hi;

  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  const double x = 0.5 * (a + b);
  const double v = f(x);
  const double scanned_x = lo + best_k * step;
  if (v > best_v || (v == best_v && x < scanned_x)) {
    return {x, v};
  }
  return {scanned_x, best_v};
}

}  // namespace ticap
