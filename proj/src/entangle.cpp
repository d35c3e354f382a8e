#include "kaonbell/entangle.hpp"

#include <cmath>
#include <numbers>

#include "kaonbell/error.hpp"

namespace kaonbell {

EntangledPair::EntangledPair(ComplexAmplitude coeff, KaonState left_a, KaonState right_a,
                             KaonState left_b, KaonState right_b)
    : coeff_(coeff), left_a_(left_a), right_a_(right_a), left_b_(left_b), right_b_(right_b) {}

std::pair<ComplexAmplitude, ComplexAmplitude> EntangledPair::branch_amplitudes(
    const KaonState& f1, const KaonState& f2) const {
  return {coeff_ * inner_product(f1, left_a_) * inner_product(f2, right_a_),
          -coeff_ * inner_product(f1, left_b_) * inner_product(f2, right_b_)};
}

ComplexAmplitude EntangledPair::amplitude(const KaonState& f1, const KaonState& f2) const {
  const auto [first, second] = branch_amplitudes(f1, f2);
  return first + second;
}

std::pair<ComplexAmplitude, ComplexAmplitude> decompose(const KaonState& v, const KaonState& e1,
                                                        const KaonState& e2) {
  const ComplexAmplitude det = e1.k0() * e2.k0bar() - e2.k0() * e1.k0bar();
  if (std::abs(det) < kAlgebraTolerance) {
    throw InvalidInput("decomposition basis vectors are linearly dependent");
  }
  return {(v.k0() * e2.k0bar() - e2.k0() * v.k0bar()) / det,
          (e1.k0() * v.k0bar() - v.k0() * e1.k0bar()) / det};
}

EntangledPair singlet_strangeness() {
  const auto [k0, k0bar] = strangeness_states();
  return EntangledPair(1.0 / std::numbers::sqrt2, k0, k0bar, k0bar, k0);
}

EntangledPair singlet_mass_basis(const MixingParameters& mix) {
  const auto [k0, k0bar] = strangeness_states();
  const auto [ks, kl] = mass_eigenstates(mix);
  const auto [a_s, a_l] = decompose(k0, ks, kl);
  const auto [b_s, b_l] = decompose(k0bar, ks, kl);
  // K0 x K0bar - K0bar x K0 = (a_s b_l - a_l b_s)(KS x KL - KL x KS)
  return EntangledPair((a_s * b_l - a_l * b_s) / std::numbers::sqrt2, ks, kl, kl, ks);
}

EntangledPair singlet_in_basis(const MixingParameters& mix, ZetaBasis basis) {
  return basis == ZetaBasis::KsKl ? singlet_mass_basis(mix) : singlet_strangeness();
}

double joint_probability(const EntangledPair& pair, const KaonState& f1, const KaonState& f2) {
  return std::norm(pair.amplitude(f1, f2));
}

DampedProbability damped_probability(const EntangledPair& pair, double zeta, const KaonState& f1,
                                     const KaonState& f2) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) {
    throw InvalidInput("decoherence parameter zeta must lie in [0, 1]");
  }
  const auto [first, second] = pair.branch_amplitudes(f1, f2);
  const double interference = 2.0 * (std::conj(first) * second).real();
  return {std::norm(first) + std::norm(second) + (1.0 - zeta) * interference};
}

DampedProbability joint_probability_zeta(const MixingParameters& mix, const ZetaModel& model,
                                         const KaonState& f1, const KaonState& f2) {
  return damped_probability(singlet_in_basis(mix, model.basis()), model.zeta(), f1, f2);
}

}  // namespace kaonbell
