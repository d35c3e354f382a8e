#pragma once

// Lower bounds on the decoherence parameter zeta implied by the Bell
// inequality, for damping applied in the K_S K_L or the K0 K0bar basis.
//
// Normalization in the K0 K0bar basis: the singlet is
// (|K0>|K0bar> - |K0bar>|K0>)/sqrt(2), so the damped probability carries the
// prefactor 1/2, fixed by unit total norm (the two product states are
// orthonormal, hence the direct terms alone sum to one over any product basis).
// In the K_S K_L basis the prefactor is N^4 / (8 |p|^2 |q|^2).

#include "kaonbell/quasispin.hpp"
#include "kaonbell/zeta_model.hpp"

namespace kaonbell {

/// The three probabilities entering the inequality, in the order
/// (P(K1, K0bar), P(K_S, K0bar), P(K_S, K1)).
struct ProbabilityTriple {
  double k1_k0bar;
  double ks_k0bar;
  double ks_k1;

  /// P(K_S, K0bar) - P(K_S, K1) - P(K1, K0bar); positive means violated.
  double bell_margin() const { return ks_k0bar - ks_k1 - k1_k0bar; }
};

/// Closed forms. Throws InvalidInput for zeta outside [0, 1].
ProbabilityTriple zeta_probability_triple(const MixingParameters& mix, double alpha, double zeta,
                                          ZetaBasis basis);

/// zeta = 0 limit.
ProbabilityTriple qm_probability_triple(const MixingParameters& mix, double alpha);

/// Exact bound on zeta for delta in (0, 1):
///   KsKl:    ((1 - delta)/delta) (sqrt(1 - delta^2) - 1 + delta)
///   K0K0bar: 1 - sqrt((1 - delta)/(1 + delta))
double zeta_lower_bound_exact(double delta, ZetaBasis basis);

/// First-order forms 1 - 3 delta / 2 and delta. Approximations only.
double zeta_lower_bound_expansion(double delta, ZetaBasis basis);

/// Bisection on zeta in [0, 1] for the sign change of the damped Bell margin at
/// the optimal CP phase; width below 1e-10. Throws NoRoot when the margin does
/// not change sign (no violation at zeta = 0).
double zeta_lower_bound_numeric(double delta, ZetaBasis basis);

struct ZetaBoundResult {
  double delta_in;
  double exact_bound;
  double expansion_bound;
  double numeric_bound;
  double uncertainty;  // half-width of [bound(delta - sigma), bound(delta + sigma)]
  ZetaBasis basis;
};

/// Throws InvalidInput unless sigma >= 0 and [delta - sigma, delta + sigma] lies in (0, 1).
ZetaBoundResult propagate_delta_uncertainty(double delta, double sigma, ZetaBasis basis);

struct ExperimentComparison {
  bool compatible;  // sigmas <= 2
  double sigmas;    // (bound - measured) / err_plus when the bound lies above, else 0
};

/// Throws InvalidInput for non-positive errors.
ExperimentComparison compare_with_experiment(const ZetaBoundResult& result, double measured_zeta,
                                             double err_plus, double err_minus);

}  // namespace kaonbell
