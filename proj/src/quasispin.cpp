#include "kaonbell/quasispin.hpp"

#include <cmath>
#include <numbers>

#include "kaonbell/error.hpp"

namespace kaonbell {
namespace {

bool finite(ComplexAmplitude z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite_angle(double angle, const char* what) {
  if (!std::isfinite(angle)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

}  // namespace

double principal_phase(ComplexAmplitude z) {
  const double phase = std::arg(z);
  return phase <= -std::numbers::pi ? std::numbers::pi : phase;
}

const char* to_string(StateLabel label) {
  switch (label) {
    case StateLabel::K0: return "K0";
    case StateLabel::K0bar: return "K0bar";
    case StateLabel::K1: return "K1";
    case StateLabel::K2: return "K2";
    case StateLabel::KS: return "KS";
    case StateLabel::KL: return "KL";
    case StateLabel::Custom: return "custom";
  }
  return "custom";
}

KaonState KaonState::from_components(ComplexAmplitude a0, ComplexAmplitude abar, StateLabel label) {
  if (!finite(a0) || !finite(abar)) {
    throw InvalidInput("kaon state components must be finite");
  }
  const double n = std::sqrt(std::norm(a0) + std::norm(abar));
  if (!(n > 0.0)) {
    throw InvalidInput("kaon state must not be the zero vector");
  }
  return KaonState(a0 / n, abar / n, label);
}

double KaonState::norm() const { return std::sqrt(std::norm(a0_) + std::norm(abar_)); }

MixingParameters MixingParameters::make(ComplexAmplitude p, ComplexAmplitude q) {
  if (!finite(p) || !finite(q)) {
    throw InvalidInput("mixing weights must be finite");
  }
  if (p == ComplexAmplitude{} || q == ComplexAmplitude{}) {
    throw DegenerateMixing("mixing weights p and q must both be nonzero");
  }
  return MixingParameters(p, q);
}

double MixingParameters::norm() const { return std::sqrt(norm_squared()); }

double MixingParameters::delta() const {
  return (std::norm(p_) - std::norm(q_)) / norm_squared();
}

double MixingParameters::eta() const { return std::abs(q_) / std::abs(p_); }

double MixingParameters::chi() const { return principal_phase(p_ * std::conj(q_)); }

CpTransform::CpTransform(double alpha) : alpha_(alpha) { require_finite_angle(alpha, "CP phase alpha"); }

Matrix2 CpTransform::matrix() const {
  // Columns are the images of |K0> and |K0bar>.
  return {{{ComplexAmplitude{}, -std::polar(1.0, -alpha_)},
           {-std::polar(1.0, alpha_), ComplexAmplitude{}}}};
}

KaonState CpTransform::apply(const KaonState& state) const {
  const Matrix2 m = matrix();
  return KaonState::from_components(m[0][0] * state.k0() + m[0][1] * state.k0bar(),
                                    m[1][0] * state.k0() + m[1][1] * state.k0bar());
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

std::pair<KaonState, KaonState> strangeness_states() {
  return {KaonState::from_components(1.0, 0.0, StateLabel::K0),
          KaonState::from_components(0.0, 1.0, StateLabel::K0bar)};
}

std::pair<KaonState, KaonState> cp_eigenstates(double alpha) {
  require_finite_angle(alpha, "CP phase alpha");
  const ComplexAmplitude phase = std::polar(1.0, alpha);
  return {KaonState::from_components(1.0, -phase, StateLabel::K1),
          KaonState::from_components(1.0, phase, StateLabel::K2)};
}

std::pair<KaonState, KaonState> mass_eigenstates(const MixingParameters& mix) {
  return {KaonState::from_components(mix.p(), -mix.q(), StateLabel::KS),
          KaonState::from_components(mix.p(), mix.q(), StateLabel::KL)};
}

MixingParameters mixing_from_epsilon(ComplexAmplitude epsilon) {
  return MixingParameters::make(1.0 + epsilon, 1.0 - epsilon);
}

KaonState rephase(const KaonState& state, double gamma0, double gammabar) {
  require_finite_angle(gamma0, "rephasing angle");
  require_finite_angle(gammabar, "rephasing angle");
  return KaonState::from_components(state.k0() * std::polar(1.0, gamma0),
                                    state.k0bar() * std::polar(1.0, gammabar), state.label());
}

MixingParameters rephase(const MixingParameters& mix, double gamma0, double gammabar) {
  require_finite_angle(gamma0, "rephasing angle");
  require_finite_angle(gammabar, "rephasing angle");
  return MixingParameters::make(mix.p() * std::polar(1.0, gamma0), mix.q() * std::polar(1.0, gammabar));
}

ComplexAmplitude inner_product(const KaonState& bra, const KaonState& ket) {
  return std::conj(bra.k0()) * ket.k0() + std::conj(bra.k0bar()) * ket.k0bar();
}

}  // namespace kaonbell
