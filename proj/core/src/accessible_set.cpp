#include "ticap/accessible_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ticap {

namespace {
constexpr double kMembershipTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;
}  // namespace

QubitState z_conjugate(const QubitState& state) {
  return QubitState(state.r(), -state.alpha());
}

AccessibleSet::AccessibleSet(QubitState source, ThermalContext ctx)
    : source_(source), ctx_(ctx) {
  const double r = source_.r();
  const double flipped = 1.0 - ctx_.lambda() * r;
  s_lo_ = std::min(r, flipped);
  s_hi_ = std::max(r, flipped);
  degenerate_ = std::abs((ctx_.lambda() + 1.0) * r - 1.0) < kDegenerateTol;
}

double AccessibleSet::kappa(double s) const {
  if (degenerate_) {
    throw std::domain_error(
        "AccessibleSet::kappa: source population equals the Gibbs value");
  }
  if (s < s_lo_ - kMembershipTol || s > s_hi_ + kMembershipTol) {
    throw std::domain_error("AccessibleSet::kappa: s outside interval");
  }
  s = std::clamp(s, s_lo_, s_hi_);
  const double r = source_.r();
  const double lambda = ctx_.lambda();
  const double product =
      (lambda * s + r - 1.0) * (lambda * r + s - 1.0);
  const double denom = std::abs((lambda + 1.0) * r - 1.0);
  return source_.coherence_magnitude() * std::sqrt(std::abs(product)) / denom;
}

QubitState AccessibleSet::tip_state() const {
  return QubitState(1.0 - ctx_.lambda() * source_.r(), Complex(0.0, 0.0));
}

QubitState AccessibleSet::extremal_state(double s, int sign) const {
  if (s < s_lo_ - kMembershipTol || s > s_hi_ + kMembershipTol) {
    throw std::domain_error("AccessibleSet::extremal_state: s outside interval");
  }
  s = std::clamp(s, s_lo_, s_hi_);
  const double mag = source_.coherence_magnitude();
  Complex phase(1.0, 0.0);
  if (mag > 0.0) {
    phase = source_.alpha() / mag;
  }
  const double envelope = degenerate_ ? mag : kappa(s);
  const double signed_env = sign >= 0 ? envelope : -envelope;
  // Positivity can be grazed by roundoff right at the boundary; pull the
  // coherence back inside if needed.
  const double limit = std::sqrt(std::max(0.0, s * (1.0 - s)));
  const double clipped = std::min(std::abs(signed_env), limit);
  return QubitState(s, (signed_env < 0 ? -clipped : clipped) * phase);
}

bool AccessibleSet::contains(const QubitState& candidate) const {
  const double s = candidate.r();
  if (s < s_lo_ - kMembershipTol || s > s_hi_ + kMembershipTol) {
    return false;
  }
  const double envelope =
      degenerate_ ? source_.coherence_magnitude()
                  : kappa(std::clamp(s, s_lo_, s_hi_));
  return candidate.coherence_magnitude() <= envelope + kMembershipTol;
}

}  // namespace ticap
