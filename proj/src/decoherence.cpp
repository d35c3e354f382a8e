#include "kaonbell/decoherence.hpp"

#include <cmath>

#include "kaonbell/bell.hpp"
#include "kaonbell/error.hpp"

namespace kaonbell {
namespace {

void require_zeta(double zeta) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) {
    throw InvalidInput("decoherence parameter zeta must lie in [0, 1]");
  }
}

void require_violating_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("zeta bounds need a leptonic asymmetry delta in (0, 1)");
  }
}

template <typename F>
double bisect(F&& f, double lo, double hi, double width) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo > 0.0 && f_hi <= 0.0)) {
    throw NoRoot("damped Bell margin does not change sign on [0, 1]");
  }
  for (int iter = 0; iter < 200 && hi - lo > width; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(ZetaBasis basis) {
  switch (basis) {
    case ZetaBasis::KsKl: return "KS_KL";
    case ZetaBasis::K0K0bar: return "K0_K0bar";
  }
  return "KS_KL";
}

std::optional<ZetaBasis> parse_zeta_basis(std::string_view text) {
  if (text == "KS_KL" || text == "ksl" || text == "KSKL" || text == "ks_kl") return ZetaBasis::KsKl;
  if (text == "K0_K0bar" || text == "k0" || text == "K0K0bar" || text == "k0_k0bar") return ZetaBasis::K0K0bar;
  return std::nullopt;
}

ZetaModel ZetaModel::make(ZetaBasis basis, double zeta) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) {
    throw InvalidInput("decoherence parameter zeta must lie in [0, 1]");
  }
  return ZetaModel(basis, zeta);
}

ProbabilityTriple qm_probability_triple(const MixingParameters& mix, double alpha) {
  const double n2 = mix.norm_squared();
  const ComplexAmplitude rotated_p = std::polar(1.0, alpha) * mix.p();
  return {0.25, std::norm(mix.p()) / (2.0 * n2), std::norm(rotated_p - mix.q()) / (4.0 * n2)};
}

ProbabilityTriple zeta_probability_triple(const MixingParameters& mix, double alpha, double zeta,
                                          ZetaBasis basis) {
  require_zeta(zeta);
  ProbabilityTriple t = qm_probability_triple(mix, alpha);
  if (basis == ZetaBasis::KsKl) {
    const double eta2 = std::norm(mix.q()) / std::norm(mix.p());
    const double d = 1.0 - eta2;
    t.k1_k0bar -= zeta * d / 8.0;
    t.ks_k0bar -= zeta * d / 4.0;
    t.ks_k1 += zeta * d * d / (8.0 * eta2);
  } else {
    const double re = (std::polar(1.0, alpha) * mix.p() * std::conj(mix.q())).real();
    t.ks_k1 += zeta * re / (2.0 * mix.norm_squared());
  }
  return t;
}

double zeta_lower_bound_exact(double delta, ZetaBasis basis) {
  require_violating_delta(delta);
  if (basis == ZetaBasis::KsKl) {
    return (1.0 - delta) / delta * (std::sqrt(1.0 - delta * delta) - 1.0 + delta);
  }
  return 1.0 - std::sqrt((1.0 - delta) / (1.0 + delta));
}

double zeta_lower_bound_expansion(double delta, ZetaBasis basis) {
  require_violating_delta(delta);
  return basis == ZetaBasis::KsKl ? 1.0 - 1.5 * delta : delta;
}

double zeta_lower_bound_numeric(double delta, ZetaBasis basis) {
  require_violating_delta(delta);
  const MixingParameters mix = mixing_from_delta(delta);
  const double alpha = optimal_alpha(mix);
  return bisect(
      [&](double zeta) { return zeta_probability_triple(mix, alpha, zeta, basis).bell_margin(); }, 0.0,
      1.0, 1e-10);
}

ZetaBoundResult propagate_delta_uncertainty(double delta, double sigma, ZetaBasis basis) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidInput("uncertainty sigma must be finite and non-negative");
  }
  if (!(delta - sigma > 0.0 && delta + sigma < 1.0)) {
    throw InvalidInput("delta +/- sigma must stay inside (0, 1)");
  }
  const double exact = zeta_lower_bound_exact(delta, basis);
  const double uncertainty =
      sigma == 0.0 ? 0.0
                   : 0.5 * std::abs(zeta_lower_bound_exact(delta + sigma, basis) -
                                    zeta_lower_bound_exact(delta - sigma, basis));
  return {delta,       exact, zeta_lower_bound_expansion(delta, basis), zeta_lower_bound_numeric(delta, basis),
          uncertainty, basis};
}

ExperimentComparison compare_with_experiment(const ZetaBoundResult& result, double measured_zeta,
                                             double err_plus, double err_minus) {
  if (!(err_plus > 0.0) || !(err_minus > 0.0)) {
    throw InvalidInput("experimental errors must be positive");
  }
  const double sigmas =
      result.exact_bound > measured_zeta ? (result.exact_bound - measured_zeta) / err_plus : 0.0;
  return {sigmas <= 2.0, sigmas};
}

}  // namespace kaonbell
