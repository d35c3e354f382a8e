#include "kaonbell/bell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "kaonbell/error.hpp"
#include "kaonbell/simd/kernels.hpp"

namespace kaonbell {

BellAssessment assess_bell_triple(const EntangledPair& pair, const KaonState& a, const KaonState& b,
                                  const KaonState& c, double alpha_used) {
  const double lhs = joint_probability(pair, a, c);
  const double rhs = joint_probability(pair, a, b) + joint_probability(pair, b, c);
  const double margin = lhs - rhs;
  return {lhs, rhs, margin, margin > kViolationTolerance, alpha_used};
}

BellAssessment uchiyama_assessment(const MixingParameters& mix, double alpha, bool swap_to_k0) {
  const auto [k0, k0bar] = strangeness_states();
  const auto [ks, kl] = mass_eigenstates(mix);
  const auto [k1, k2] = cp_eigenstates(alpha);
  return assess_bell_triple(singlet_strangeness(), ks, k1, swap_to_k0 ? k0 : k0bar, alpha);
}

double reduced_inequality_margin(const MixingParameters& mix, double alpha) {
  return (std::polar(1.0, alpha) * mix.p() * std::conj(mix.q())).real() - std::norm(mix.q());
}

double optimal_alpha(const MixingParameters& mix) { return -mix.chi(); }

AlphaScan scan_alpha(const MixingParameters& mix, std::size_t points) {
  if (points < 2) {
    throw InvalidInput("scan_alpha needs at least two grid points");
  }
  std::vector<double> alpha(points), cos_a(points), sin_a(points), margin(points);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    alpha[i] = -std::numbers::pi + step * static_cast<double>(i);
    cos_a[i] = std::cos(alpha[i]);
    sin_a[i] = std::sin(alpha[i]);
  }
  const ComplexAmplitude z = mix.p() * std::conj(mix.q());
  simd::rotated_real_part(cos_a, sin_a, z.real(), z.imag(), std::norm(mix.q()), margin);
  const auto best = std::max_element(margin.begin(), margin.end());
  return {alpha[static_cast<std::size_t>(best - margin.begin())], *best};
}

LrtBoundCheck lrt_bound_check(const MixingParameters& mix) {
  const double alpha = optimal_alpha(mix);
  const bool p_le_q = !uchiyama_assessment(mix, alpha, false).violated;
  const bool q_le_p = !uchiyama_assessment(mix, alpha, true).violated;
  return {p_le_q, q_le_p, p_le_q && q_le_p};
}

double leptonic_asymmetry(const MixingParameters& mix) { return mix.delta(); }

MixingParameters mixing_from_delta(double delta, double im_part) {
  if (!std::isfinite(delta) || !(std::abs(delta) < 1.0)) {
    throw InvalidInput("leptonic asymmetry must satisfy |delta| < 1");
  }
  if (!std::isfinite(im_part) || im_part * im_part > 1.0 + delta) {
    throw InvalidInput("im_part must satisfy im_part^2 <= 1 + delta");
  }
  const double re_part = std::sqrt(1.0 + delta - im_part * im_part);
  return MixingParameters::make({re_part, im_part}, std::sqrt(1.0 - delta));
}

}  // namespace kaonbell
