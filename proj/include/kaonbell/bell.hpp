#pragma once

// Uchiyama's Bell inequality for the t = 0 kaon pair,
//
//   P(K_S, K0bar) <= P(K_S, K1) + P(K1, K0bar),
//
// evaluated under an arbitrary phase alpha of the CP transformation. No time
// parameter appears anywhere in this interface: everything is at t = 0.
//
// At t = 0 the inequality probes contextuality rather than nonlocality; that
// distinction is not modelled here.

#include <cstddef>

#include "kaonbell/entangle.hpp"
#include "kaonbell/quasispin.hpp"

namespace kaonbell {

/// Margins above this are a genuine violation.
inline constexpr double kViolationTolerance = 1e-12;

struct BellAssessment {
  double lhs;
  double rhs;
  double margin;  // lhs - rhs
  bool violated;  // margin > kViolationTolerance
  double alpha_used;
};

/// P(a, c) <= P(a, b) + P(b, c) on an arbitrary pair and settings. Passing
/// (K_L, K2, K0bar) gives the long-lived variant, which reduces to the same
/// epsilon inequality as the (K_S, K1, K0bar) form.
BellAssessment assess_bell_triple(const EntangledPair& pair, const KaonState& a, const KaonState& b,
                                  const KaonState& c, double alpha_used);

/// The (K_S, K1(alpha), K0bar) inequality on the singlet; swap_to_k0 replaces
/// K0bar by K0.
BellAssessment uchiyama_assessment(const MixingParameters& mix, double alpha, bool swap_to_k0 = false);

/// Re{e^{i alpha} p q*} - |q|^2. Equals 2 N^2 times the unswapped Uchiyama margin.
double reduced_inequality_margin(const MixingParameters& mix, double alpha);

/// alpha* = -chi = -arg(p q*), maximizing Re{e^{i alpha} p q*} to |p||q|.
double optimal_alpha(const MixingParameters& mix);

struct AlphaScan {
  double best_alpha;
  double best_margin;  // reduced margin at best_alpha
};

/// Reduced margin on `points` equally spaced alpha in [-pi, pi], vectorized.
/// Throws InvalidInput for points < 2.
AlphaScan scan_alpha(const MixingParameters& mix, std::size_t points);

/// Outcome of the phase-optimized inequalities |p| <= |q| (K0bar form) and
/// |q| <= |p| (K0 form).
struct LrtBoundCheck {
  bool p_le_q;             // K0bar-form inequality holds at optimal alpha
  bool q_le_p;             // K0-form inequality holds at optimal alpha
  bool equality_required;  // both hold, which forces |p| = |q|

  /// Local realism survives only with both forms satisfied, i.e. strict CP
  /// conservation in mixing.
  bool lrt_compatible() const { return p_le_q && q_le_p; }
};

LrtBoundCheck lrt_bound_check(const MixingParameters& mix);

/// delta = (|p|^2 - |q|^2) / (|p|^2 + |q|^2)
double leptonic_asymmetry(const MixingParameters& mix);

/// Representative weights for a given delta: q = sqrt(1 - delta),
/// p = sqrt(1 + delta - im_part^2) + i im_part, so |p|^2 = 1 + delta and
/// |q|^2 = 1 - delta. im_part fixes the (unobservable) relative phase chi.
/// Throws InvalidInput for |delta| >= 1 or im_part^2 > 1 + delta.
MixingParameters mixing_from_delta(double delta, double im_part = 0.0);

}  // namespace kaonbell
