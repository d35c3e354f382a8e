// kaonbell: reproduce the Bell-inequality / CP-violation / decoherence numbers.
//
//   kaonbell reproduce [--config inputs.json] [--format table|json|csv] [--output file]
//   kaonbell bi --eps-mag 1e-3 --eps-phase-deg 45 [--alpha-deg 0]
//   kaonbell zeta-bound --delta 3.27e-3 --sigma 0.12e-3 --basis KS_KL
//   kaonbell mc-delta --delta 3.27e-3 --n 10000000 --seed 42
//
// Exit status: 0 success, 1 a reproduction claim failed, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kaonbell/bell.hpp"
#include "kaonbell/decoherence.hpp"
#include "kaonbell/report.hpp"
#include "kaonbell/simd/kernels.hpp"
#include "kaonbell/tagging_mc.hpp"

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

using Fields = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Key/value records share one renderer for the three output formats.
std::string render(const Fields& fields, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields) doc[k] = v;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : fields) {
      out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  } else {
    for (const auto& [k, v] : fields) {
      out << std::left << std::setw(16) << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
  return out.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw kaonbell::InvalidInput("cannot write output file '" + output + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kaonbell;

  CLI::App app{"Bell inequality, CP violation and decoherence bounds for entangled neutral kaons"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "table";
  std::string output;
  app.add_option("--config", config_path, "JSON file with experimental inputs")->check(CLI::ExistingFile);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--output", output, "Write output to this file instead of stdout");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Check every published number against the inputs");
  reproduce_cmd->fallthrough();

  auto* bi_cmd = app.add_subcommand("bi", "Evaluate the Bell inequality for p = 1 + eps, q = 1 - eps");
  bi_cmd->fallthrough();
  double eps_mag = 0.0;
  double eps_phase_deg = 0.0;
  std::optional<double> alpha_deg;
  bi_cmd->add_option("--eps-mag", eps_mag, "|eps|")->required()->check(CLI::NonNegativeNumber);
  bi_cmd->add_option("--eps-phase-deg", eps_phase_deg, "arg(eps) in degrees")->required();
  bi_cmd->add_option("--alpha-deg", alpha_deg, "CP phase alpha in degrees (default: optimal)");

  auto* zeta_cmd = app.add_subcommand("zeta-bound", "Lower bound on the decoherence parameter zeta");
  zeta_cmd->fallthrough();
  double zeta_delta = 0.0;
  double zeta_sigma = 0.0;
  std::string basis_name = "KS_KL";
  zeta_cmd->add_option("--delta", zeta_delta, "Leptonic asymmetry delta in (0, 1)")->required();
  zeta_cmd->add_option("--sigma", zeta_sigma, "Uncertainty on delta")->check(CLI::NonNegativeNumber);
  zeta_cmd->add_option("--basis", basis_name, "KS_KL or K0_K0bar");

  auto* mc_cmd = app.add_subcommand("mc-delta", "Monte Carlo of K_L semileptonic tagging");
  mc_cmd->fallthrough();
  double mc_delta = 0.0;
  std::int64_t mc_n = 0;
  std::uint64_t mc_seed = 0;
  unsigned mc_threads = 0;
  mc_cmd->add_option("--delta", mc_delta, "True leptonic asymmetry")->required();
  mc_cmd->add_option("--n", mc_n, "Number of events (>= 1)")->required();
  mc_cmd->add_option("--seed", mc_seed, "RNG seed")->required();
  mc_cmd->add_option("--threads", mc_threads, "Worker threads (0: all cores); results do not depend on it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*reproduce_cmd) {
      const ExperimentalInputs inputs = config_path.empty() ? ExperimentalInputs{} : load_inputs(config_path);
      const ReproductionReport report = reproduce(inputs);
      const std::string text =
          format == "json" ? to_json(report) : format == "csv" ? to_csv(report) : to_table(report);
      emit(text, output);
      return report.all_pass() ? 0 : kExitClaimFailure;
    }

    if (*bi_cmd) {
      const MixingParameters mix = mixing_from_epsilon(std::polar(eps_mag, deg_to_rad(eps_phase_deg)));
      const double alpha = alpha_deg ? deg_to_rad(*alpha_deg) : optimal_alpha(mix);
      const BellAssessment a = uchiyama_assessment(mix, alpha);
      emit(render({{"alpha_deg", round_significant(a.alpha_used * 180.0 / std::numbers::pi)},
                   {"alpha_source", alpha_deg ? "given" : "optimal"},
                   {"lhs", round_significant(a.lhs)},
                   {"rhs", round_significant(a.rhs)},
                   {"margin", round_significant(a.margin)},
                   {"violated", a.violated}},
                  format),
           output);
      return 0;
    }

    if (*zeta_cmd) {
      const auto basis = parse_zeta_basis(basis_name);
      if (!basis) {
        std::cerr << "error: --basis must be KS_KL or K0_K0bar\n";
        return kExitUsage;
      }
      const ZetaBoundResult r = propagate_delta_uncertainty(zeta_delta, zeta_sigma, *basis);
      char shown[64];
      std::snprintf(shown, sizeof shown, "%.4f +/- %.4f", r.exact_bound, r.uncertainty);
      emit(render({{"basis", to_string(r.basis)},
                   {"delta", round_significant(r.delta_in)},
                   {"exact", round_significant(r.exact_bound)},
                   {"expansion", round_significant(r.expansion_bound)},
                   {"numeric", round_significant(r.numeric_bound)},
                   {"uncertainty", round_significant(r.uncertainty)},
                   {"bound", std::string(shown)}},
                  format),
           output);
      return 0;
    }

    if (*mc_cmd) {
      if (mc_n < 1) {
        std::cerr << "error: --n must be at least 1\n";
        return kExitUsage;
      }
      const MixingParameters mix = mixing_from_delta(mc_delta);
      const McResult r = sample_kl_tags({static_cast<std::uint64_t>(mc_n), mc_seed, mix, mc_threads});
      emit(render({{"n_plus", r.n_plus},
                   {"n_minus", r.n_minus},
                   {"delta_hat", round_significant(r.delta_hat)},
                   {"std_error", round_significant(r.std_error)},
                   {"delta_analytic", round_significant(leptonic_asymmetry(mix))},
                   {"generator", r.generator},
                   {"simd", std::string(simd::to_string(simd::active_isa()))}},
                  format),
           output);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
