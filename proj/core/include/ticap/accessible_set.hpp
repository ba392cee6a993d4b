// Geometry of the set of qubit states reachable from a source state by
// thermal operations: a population interval with a coherence envelope.

#pragma once

#include "ticap/states.hpp"

namespace ticap {

/// Z conjugation (r, alpha) -> (r, -alpha); an entropy-preserving involution.
QubitState z_conjugate(const QubitState& state);

/// States eta[s, beta] reachable from a source eta[r, alpha]:
/// ground population s ranges over the closed interval between r and
/// 1 - lambda r, and |beta| is bounded by the envelope kappa(s).
///
/// A source whose population equals the Gibbs value g is a degenerate case:
/// the envelope formula is 0/0 there, and the set is taken to be the pure
/// dephasing segment {eta[g, c alpha] : c in [-1, 1]} (the continuity limit
/// of the cone geometry).
class AccessibleSet {
 public:
  AccessibleSet(QubitState source, ThermalContext ctx);

  const QubitState& source() const { return source_; }
  const ThermalContext& context() const { return ctx_; }
  double s_lo() const { return s_lo_; }
  double s_hi() const { return s_hi_; }

  /// True when the source population equals the Gibbs population within
  /// 1e-12 (the dephasing-segment regime).
  bool gibbs_population() const { return degenerate_; }

  /// Coherence envelope
  ///   kappa(s) = |alpha| sqrt(|(lambda s + r - 1)(lambda r + s - 1)|)
  ///              / |(lambda + 1) r - 1|.
  /// Requires s in [s_lo, s_hi] and a non-degenerate source.
  double kappa(double s) const;

  /// Diagonal extremal state eta[1 - lambda r, 0].
  QubitState tip_state() const;

  /// Boundary state eta[s, sign * kappa(s) * e^{i phi0}] where phi0 is the
  /// phase of the source coherence. sign selects the Z-mirrored branch.
  QubitState extremal_state(double s, int sign) const;

  /// Membership test with absolute tolerance 1e-10 on both the population
  /// interval and the coherence envelope.
  bool contains(const QubitState& candidate) const;

 private:
  QubitState source_;
  ThermalContext ctx_;
  double s_lo_;
  double s_hi_;
  bool degenerate_;
};

}  // namespace ticap
