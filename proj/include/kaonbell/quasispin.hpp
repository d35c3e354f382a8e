#pragma once

// Single-kaon quasi-spin algebra in the strangeness basis {|K0>, |K0bar>}.

#include <array>
#include <complex>
#include <utility>

namespace kaonbell {

using ComplexAmplitude = std::complex<double>;
using Matrix2 = std::array<std::array<ComplexAmplitude, 2>, 2>;

/// Tolerance for algebraic identities (normalization, orthogonality, (CP)^2 = 1).
inline constexpr double kAlgebraTolerance = 1e-12;

/// arg(z) on (-pi, pi]; an exact -pi is reported as +pi.
double principal_phase(ComplexAmplitude z);

enum class StateLabel { K0, K0bar, K1, K2, KS, KL, Custom };

const char* to_string(StateLabel label);

/// Unit vector a0|K0> + abar|K0bar>. Always normalized at construction.
class KaonState {
 public:
  /// Normalizes (a0, abar). Throws InvalidInput for a zero or non-finite vector.
  static KaonState from_components(ComplexAmplitude a0, ComplexAmplitude abar,
                                   StateLabel label = StateLabel::Custom);

  ComplexAmplitude k0() const { return a0_; }
  ComplexAmplitude k0bar() const { return abar_; }
  StateLabel label() const { return label_; }
  double norm() const;

 private:
  KaonState(ComplexAmplitude a0, ComplexAmplitude abar, StateLabel label)
      : a0_(a0), abar_(abar), label_(label) {}

  ComplexAmplitude a0_;
  ComplexAmplitude abar_;
  StateLabel label_;
};

/// Weights of the mass eigenstates |K_S,L> = (p|K0> -/+ q|K0bar>)/N.
class MixingParameters {
 public:
  /// Throws DegenerateMixing when p or q vanishes, InvalidInput when non-finite.
  static MixingParameters make(ComplexAmplitude p, ComplexAmplitude q);

  ComplexAmplitude p() const { return p_; }
  ComplexAmplitude q() const { return q_; }

  /// N^2 = |p|^2 + |q|^2
  double norm_squared() const { return std::norm(p_) + std::norm(q_); }
  double norm() const;
  /// (|p|^2 - |q|^2) / N^2, the K_L semileptonic charge asymmetry.
  double delta() const;
  /// |q| / |p|
  double eta() const;
  /// Relative phase arg(p q*), principal branch.
  double chi() const;

  /// The same physics with the roles of p and q exchanged.
  MixingParameters swapped() const { return MixingParameters(q_, p_); }

 private:
  MixingParameters(ComplexAmplitude p, ComplexAmplitude q) : p_(p), q_(q) {}

  ComplexAmplitude p_;
  ComplexAmplitude q_;
};

/// CP|K0> = -e^{i alpha}|K0bar>, CP|K0bar> = -e^{-i alpha}|K0>, with (CP)^2 = 1.
class CpTransform {
 public:
  /// Throws InvalidInput for a non-finite alpha.
  explicit CpTransform(double alpha);

  double alpha() const { return alpha_; }
  Matrix2 matrix() const;
  KaonState apply(const KaonState& state) const;

 private:
  double alpha_;
};

Matrix2 multiply(const Matrix2& a, const Matrix2& b);

/// (|K0>, |K0bar>)
std::pair<KaonState, KaonState> strangeness_states();

/// (|K1>, |K2>) = (|K0> -/+ e^{i alpha}|K0bar>)/sqrt(2), CP eigenvalues +1 and -1.
std::pair<KaonState, KaonState> cp_eigenstates(double alpha);

/// (|K_S>, |K_L>). Not orthogonal unless |p| = |q|.
std::pair<KaonState, KaonState> mass_eigenstates(const MixingParameters& mix);

/// Convention p = 1 + eps, q = 1 - eps. Throws DegenerateMixing for eps = +/-1.
MixingParameters mixing_from_epsilon(ComplexAmplitude epsilon);

/// Multiplies the K0 component by e^{i gamma0} and the K0bar component by e^{i gammabar}.
KaonState rephase(const KaonState& state, double gamma0, double gammabar);

/// Rephasing of the weights consistent with rephase() on the components of K_S, K_L.
MixingParameters rephase(const MixingParameters& mix, double gamma0, double gammabar);

/// <bra|ket>, conjugate-linear in bra.
ComplexAmplitude inner_product(const KaonState& bra, const KaonState& ket);

}  // namespace kaonbell
