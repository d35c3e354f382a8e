#pragma once

// Reproduction report: runs the Bell and decoherence machinery over a set of
// experimental inputs and checks every published number.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kaonbell/error.hpp"

namespace kaonbell {

/// Inputs with the published values as defaults.
struct ExperimentalInputs {
  double delta_l = 3.27e-3;
  double delta_l_sigma = 0.12e-3;
  double zeta_ksl_measured = 0.13;
  double zeta_ksl_err_plus = 0.16;
  double zeta_ksl_err_minus = 0.15;
  double zeta_k0_measured = 0.4;
  double zeta_k0_err = 0.7;

  /// Throws InvalidInput for non-finite values, |delta_l| >= 1, a negative
  /// delta_l_sigma, |delta_l| -/+ delta_l_sigma leaving (0, 1) when delta_l != 0,
  /// or non-positive measured zeta errors.
  void validate() const;

  friend bool operator==(const ExperimentalInputs&, const ExperimentalInputs&) = default;
};

/// Malformed config file. what() carries line and field diagnostics.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parses a JSON object; every field optional, unknown fields rejected.
ExperimentalInputs parse_inputs(std::string_view json_text);
ExperimentalInputs load_inputs(const std::filesystem::path& path);

enum class Comparison {
  Within,   // |computed - paper_value| <= tolerance
  AtLeast,  // computed >= paper_value - tolerance
  AtMost,   // computed <= paper_value + tolerance
};

const char* to_string(Comparison c);

struct Claim {
  std::string id;
  std::string description;
  double paper_value;
  double computed;
  double tolerance;
  Comparison comparison;
  bool pass;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ReproductionReport {
  ExperimentalInputs inputs;
  std::vector<Claim> claims;

  bool all_pass() const;
  const Claim* find(std::string_view id) const;

  friend bool operator==(const ReproductionReport&, const ReproductionReport&) = default;
};

/// x rounded to 12 significant digits; the precision of every emitted number.
double round_significant(double x);

/// Evaluates every claim. Pass/fail uses full precision; the stored numbers are
/// rounded with round_significant so that the emitted files reproduce the
/// report exactly.
ReproductionReport reproduce(const ExperimentalInputs& inputs);

/// Human-readable remarks about the inputs (e.g. "CP-conserving input").
std::vector<std::string> report_notes(const ExperimentalInputs& inputs);

std::string to_json(const ReproductionReport& report);
std::string to_csv(const ReproductionReport& report);
std::string to_table(const ReproductionReport& report);

/// Inverse of to_json / to_csv. Throw ConfigError on malformed text.
ReproductionReport report_from_json(std::string_view text);
ReproductionReport report_from_csv(std::string_view text);

}  // namespace kaonbell
