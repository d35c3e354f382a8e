// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include "kaonbell/bell.hpp"
#include "kaonbell/decoherence.hpp"
#include "kaonbell/entangle.hpp"
#include "kaonbell/tagging_mc.hpp"
#include "oracle.hpp"

using namespace kaonbell;
using std::numbers::pi;

namespace {

constexpr double kDelta = 3.27e-3;
constexpr double kDeltaSigma = 0.12e-3;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

template <typename F>
void criterion(int number, const char* title, F&& body) {
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, title, o.detail.c_str());
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

KaonState from_vec(const oracle::Vec& v) { return KaonState::from_components(v[0], v[1]); }

Outcome epsilon_inequality() {
  const auto real_part = uchiyama_assessment(mixing_from_epsilon(std::polar(2.28e-3, pi / 4.0)), 0.0);
  const auto imaginary = uchiyama_assessment(mixing_from_epsilon({0.0, 2.28e-3}), 0.0);
  const bool ok = real_part.violated && real_part.margin > 1e-12 && !imaginary.violated && imaginary.margin < -1e-12;
  return {ok, fmt("margin(45 deg) = %.3e, margin(90 deg) = %.3e", real_part.margin, imaginary.margin)};
}

Outcome optimal_phase() {
  bool ok = true;
  for (const double d : {kDelta, -kDelta}) {
    const auto mix = mixing_from_delta(d);
    const double a = optimal_alpha(mix);
    const double reduced = reduced_inequality_margin(mix, a);
    ok = ok && std::abs(reduced - (std::abs(mix.p()) * std::abs(mix.q()) - std::norm(mix.q()))) <= 1e-12;
    const auto lrt = lrt_bound_check(mix);
    const bool k0bar_violated = uchiyama_assessment(mix, a).violated;
    const bool k0_violated = uchiyama_assessment(mix, a, true).violated;
    ok = ok && k0bar_violated == (d > 0) && k0_violated == (d < 0);
    ok = ok && k0bar_violated == !lrt.p_le_q && k0_violated == !lrt.q_le_p && !lrt.equality_required;
  }
  ok = ok && lrt_bound_check(mixing_from_delta(0.0)).equality_required;
  return {ok, "|p| <= |q| and |q| <= |p| forms checked at +/-3.27e-3; equality only at delta = 0"};
}

Outcome delta_bound() {
  bool ok = true;
  for (const double d : {kDelta - kDeltaSigma, kDelta, kDelta + kDeltaSigma}) {
    const auto lrt = lrt_bound_check(mixing_from_delta(d));
    ok = ok && !lrt.p_le_q && !lrt.lrt_compatible();
  }
  const auto mix = mixing_from_delta(kDelta);
  return {ok, fmt("delta = %.4g, optimized margin = %.3e (> 0: violated)", leptonic_asymmetry(mix),
                  uchiyama_assessment(mix, optimal_alpha(mix)).margin)};
}

Outcome ksl_bound() {
  const auto r = propagate_delta_uncertainty(kDelta, kDeltaSigma, ZetaBasis::KsKl);
  const double agreement = std::abs(r.numeric_bound - r.exact_bound);
  const bool ok = std::abs(r.exact_bound - 0.9951) <= 5e-4 && r.uncertainty >= 1e-4 && r.uncertainty <= 3e-4 &&
                  agreement <= 1e-9;
  return {ok, fmt("bound %.6f +/- %.2e, |numeric - exact| = %.1e", r.exact_bound, r.uncertainty, agreement)};
}

Outcome k0_bound() {
  const auto r = propagate_delta_uncertainty(kDelta, kDeltaSigma, ZetaBasis::K0K0bar);
  const double agreement = std::abs(r.numeric_bound - r.exact_bound);
  const bool ok = std::abs(r.exact_bound - 0.0033) <= 2e-4 && r.uncertainty >= 0.5e-4 && r.uncertainty <= 2e-4 &&
                  agreement <= 1e-9;
  return {ok, fmt("bound %.6f +/- %.2e, |numeric - exact| = %.1e", r.exact_bound, r.uncertainty, agreement)};
}

Outcome expansions() {
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double d = std::pow(10.0, -4.0 + 3.0 * i / 60.0);
    for (const auto basis : {ZetaBasis::KsKl, ZetaBasis::K0K0bar}) {
      const double err = std::abs(zeta_lower_bound_exact(d, basis) - zeta_lower_bound_expansion(d, basis));
      worst = std::max(worst, err / (d * d));
    }
  }
  return {worst <= 2.0, fmt("max |exact - expansion| / delta^2 = %.3f over 61 log-spaced delta (limit 2)", worst)};
}

Outcome closed_forms() {
  oracle::Gen gen(20240701);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.complex(0.3, 2.0), q = gen.complex(0.3, 2.0);
    const auto mix = MixingParameters::make(p, q);
    const double alpha = gen.angle(), zeta = gen.uniform(0.0, 1.0);
    const auto s = oracle::ks(p, q), k1 = oracle::k1(alpha), kb = oracle::k0bar();
    const auto qm = qm_probability_triple(mix, alpha);
    const auto z = zeta_probability_triple(mix, alpha, zeta, ZetaBasis::KsKl);
    const double diffs[] = {
        qm.k1_k0bar - oracle::probability(k1, kb),
        qm.ks_k0bar - oracle::probability(s, kb),
        qm.ks_k1 - oracle::probability(s, k1),
        qm.k1_k0bar - 0.25,
        z.k1_k0bar - oracle::zeta_prob_kskl(p, q, zeta, k1, kb),
        z.ks_k0bar - oracle::zeta_prob_kskl(p, q, zeta, s, kb),
        z.ks_k1 - oracle::zeta_prob_kskl(p, q, zeta, s, k1),
    };
    for (const double d : diffs) worst = std::max(worst, std::abs(d));
  }
  return {worst <= 1e-10, fmt("max deviation %.2e over 100 random (p, q, alpha, zeta)", worst)};
}

Outcome experiment() {
  const auto ksl = compare_with_experiment(propagate_delta_uncertainty(kDelta, kDeltaSigma, ZetaBasis::KsKl), 0.13,
                                           0.16, 0.15);
  const auto k0 = compare_with_experiment(propagate_delta_uncertainty(kDelta, kDeltaSigma, ZetaBasis::K0K0bar),
                                          0.4, 0.7, 0.7);
  const bool ok = ksl.sigmas >= 5.0 && !ksl.compatible && k0.compatible;
  return {ok, fmt("KS_KL excluded at %.2f sigma; K0_K0bar %.2f sigma (compatible)", ksl.sigmas, k0.sigmas)};
}

Outcome monte_carlo() {
  const auto mix = mixing_from_delta(kDelta);
  const double truth = leptonic_asymmetry(mix);
  int within = 0;
  bool reproducible = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = sample_kl_tags({10000000, seed, mix});
    if (std::abs(r.delta_hat - truth) <= 5.0 * r.std_error) ++within;
    if (seed <= 2) {
      const auto again = sample_kl_tags({10000000, seed, mix, 1});
      reproducible = reproducible && again.n_plus == r.n_plus && again.delta_hat == r.delta_hat;
    }
  }
  return {within >= 19 && reproducible,
          fmt("%.0f/20 seeds within 5 std errors at n = 1e7; rerun bit-identical: ", within) +
              (reproducible ? "yes" : "no")};
}

Outcome properties() {
  oracle::Gen gen(777);
  int bad_rephase = 0, bad_state = 0, bad_cp = 0, bad_limits = 0;
  const auto [k0, k0bar] = strangeness_states();
  for (int i = 0; i < 100; ++i) {
    const auto mix = MixingParameters::make(gen.complex(0.2, 2.0), gen.complex(0.2, 2.0));

    const auto re = rephase(mix, gen.angle(), gen.angle());
    const double m1 = uchiyama_assessment(mix, optimal_alpha(mix)).margin;
    const double m2 = uchiyama_assessment(re, optimal_alpha(re)).margin;
    if (std::abs(m1 - m2) > 1e-12) ++bad_rephase;

    const auto pair = singlet_mass_basis(mix);
    const auto f = from_vec(gen.state()), g = from_vec(gen.state());
    double total = 0.0;
    for (const auto& a : {k0, k0bar})
      for (const auto& b : {k0, k0bar}) total += joint_probability(pair, a, b);
    if (std::abs(total - 1.0) > 1e-12 || joint_probability(pair, f, f) > 1e-12 ||
        std::abs(pair.amplitude(f, g) + pair.amplitude(g, f)) > 1e-12)
      ++bad_state;

    const Matrix2 m = CpTransform(gen.uniform(-10.0, 10.0)).matrix();
    const Matrix2 sq = multiply(m, m);
    if (std::abs(sq[0][0] - 1.0) > 1e-12 || std::abs(sq[1][1] - 1.0) > 1e-12 || std::abs(sq[0][1]) > 1e-12 ||
        std::abs(sq[1][0]) > 1e-12)
      ++bad_cp;

    const double qm = joint_probability(singlet_strangeness(), f, g);
    const double d = gen.uniform(1e-6, 0.9);
    const auto dmix = mixing_from_delta(d);
    for (const auto basis : {ZetaBasis::KsKl, ZetaBasis::K0K0bar}) {
      if (std::abs(joint_probability_zeta(mix, ZetaModel::make(basis, 0.0), f, g).value - qm) > 1e-12) ++bad_limits;
      if (zeta_probability_triple(dmix, optimal_alpha(dmix), 1.0, basis).bell_margin() > 1e-12) ++bad_limits;
    }
  }
  std::ostringstream out;
  out << "failures over 100 cases each: rephasing " << bad_rephase << ", antisymmetry/completeness " << bad_state
      << ", CP^2 " << bad_cp << ", zeta limits " << bad_limits;
  return {bad_rephase + bad_state + bad_cp + bad_limits == 0, out.str()};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion(1, "epsilon inequality at alpha = 0", epsilon_inequality);
  criterion(2, "phase-optimized bound |p| <= |q|", optimal_phase);
  criterion(3, "leptonic asymmetry contradicts local realism", delta_bound);
  criterion(4, "zeta bound, K_S K_L basis", ksl_bound);
  criterion(5, "zeta bound, K0 K0bar basis", k0_bound);
  criterion(6, "first-order expansions", expansions);
  criterion(7, "closed forms vs direct amplitudes", closed_forms);
  criterion(8, "comparison with measured zeta", experiment);
  criterion(9, "tagging Monte Carlo", monte_carlo);
  criterion(10, "property suites", properties);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failures, secs);
  return failures == 0 ? 0 : 1;
}
