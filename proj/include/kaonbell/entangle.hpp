#pragma once

// Antisymmetric two-kaon state produced at t = 0 and its joint detection
// probabilities, with and without a damped interference term.

#include <utility>

#include "kaonbell/quasispin.hpp"
#include "kaonbell/zeta_model.hpp"

namespace kaonbell {

/// coeff * (|left_a>_l |right_a>_r - |left_b>_l |right_b>_r)
class EntangledPair {
 public:
  EntangledPair(ComplexAmplitude coeff, KaonState left_a, KaonState right_a, KaonState left_b,
                KaonState right_b);

  ComplexAmplitude coeff() const { return coeff_; }
  const KaonState& left_a() const { return left_a_; }
  const KaonState& right_a() const { return right_a_; }
  const KaonState& left_b() const { return left_b_; }
  const KaonState& right_b() const { return right_b_; }

  /// The two product-state contributions to <f1|_l <f2|_r |psi>, sign included:
  /// first = coeff <f1|a_l><f2|a_r>, second = -coeff <f1|b_l><f2|b_r>.
  std::pair<ComplexAmplitude, ComplexAmplitude> branch_amplitudes(const KaonState& f1,
                                                                  const KaonState& f2) const;

  /// <f1|_l <f2|_r |psi>
  ComplexAmplitude amplitude(const KaonState& f1, const KaonState& f2) const;

 private:
  ComplexAmplitude coeff_;
  KaonState left_a_;
  KaonState right_a_;
  KaonState left_b_;
  KaonState right_b_;
};

/// Coefficients (c1, c2) with v = c1 e1 + c2 e2, from the exact 2x2 solve.
/// Throws InvalidInput when e1, e2 are linearly dependent.
std::pair<ComplexAmplitude, ComplexAmplitude> decompose(const KaonState& v, const KaonState& e1,
                                                        const KaonState& e2);

/// (|K0>|K0bar> - |K0bar>|K0>)/sqrt(2)
EntangledPair singlet_strangeness();

/// The same state written over |K_S>|K_L> - |K_L>|K_S>. The coefficient,
/// N^2/(2pq)/sqrt(2), comes from decomposing |K0>, |K0bar> onto K_S, K_L.
EntangledPair singlet_mass_basis(const MixingParameters& mix);

/// singlet_mass_basis for KsKl, singlet_strangeness for K0K0bar.
EntangledPair singlet_in_basis(const MixingParameters& mix, ZetaBasis basis);

/// |<f1|_l <f2|_r |psi>|^2
double joint_probability(const EntangledPair& pair, const KaonState& f1, const KaonState& f2);

/// Value of a damped "probability". Not clamped: for some inputs the damped
/// expression leaves [0, 1], and physical() reports that.
struct DampedProbability {
  double value;

  bool physical() const { return value >= -kAlgebraTolerance && value <= 1.0 + kAlgebraTolerance; }
};

/// |A|^2 + |B|^2 - 2 (1 - zeta) Re{A* B} with A, B the branch amplitudes of the
/// pair written in the model's basis.
DampedProbability joint_probability_zeta(const MixingParameters& mix, const ZetaModel& model,
                                         const KaonState& f1, const KaonState& f2);

/// Same, for an explicit pair.
DampedProbability damped_probability(const EntangledPair& pair, double zeta, const KaonState& f1,
                                     const KaonState& f2);

}  // namespace kaonbell
