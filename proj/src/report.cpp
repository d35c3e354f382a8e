#include "kaonbell/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "kaonbell/bell.hpp"
#include "kaonbell/decoherence.hpp"
#include "kaonbell/entangle.hpp"
#include "kaonbell/tagging_mc.hpp"

namespace kaonbell {
namespace {

using ordered_json = nlohmann::ordered_json;

// Published reference values.
constexpr double kEpsilonMagnitude = 2.28e-3;
constexpr double kEpsilonPhase = std::numbers::pi / 4.0;
constexpr double kZetaKsKlBound = 0.9951;
constexpr double kZetaKsKlUncertainty = 0.0002;
constexpr double kZetaK0Bound = 0.0033;
constexpr double kZetaK0Uncertainty = 0.0001;
constexpr std::uint64_t kMcEvents = 10'000'000;
constexpr std::uint64_t kMcSeed = 42;

struct InputField {
  const char* name;
  double ExperimentalInputs::*member;
};

constexpr InputField kInputFields[] = {
    {"delta_l", &ExperimentalInputs::delta_l},
    {"delta_l_sigma", &ExperimentalInputs::delta_l_sigma},
    {"zeta_ksl_measured", &ExperimentalInputs::zeta_ksl_measured},
    {"zeta_ksl_err_plus", &ExperimentalInputs::zeta_ksl_err_plus},
    {"zeta_ksl_err_minus", &ExperimentalInputs::zeta_ksl_err_minus},
    {"zeta_k0_measured", &ExperimentalInputs::zeta_k0_measured},
    {"zeta_k0_err", &ExperimentalInputs::zeta_k0_err},
};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

std::string at_line(std::size_t line) {
  return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

bool evaluate(Comparison c, double target, double computed, double tol) {
  switch (c) {
    case Comparison::Within: return std::abs(computed - target) <= tol;
    case Comparison::AtLeast: return computed >= target - tol;
    case Comparison::AtMost: return computed <= target + tol;
  }
  return false;
}

Claim make_claim(std::string id, std::string description, double target, double computed, double tol,
                 Comparison c = Comparison::Within) {
  const bool pass = std::isfinite(computed) && evaluate(c, target, computed, tol);
  return {std::move(id),           std::move(description),       round_significant(target),
          round_significant(computed), round_significant(tol), c, pass};
}

double flag(bool b) { return b ? 1.0 : 0.0; }

struct BasisBounds {
  double exact;
  double expansion;
  double numeric;
  double uncertainty;
};

// Bounds for |delta|; delta = 0 gives the CP-conserving limits (1 and 0).
BasisBounds bounds_for(double delta, double sigma, ZetaBasis basis) {
  const double d = std::abs(delta);
  if (d == 0.0) {
    const double limit = basis == ZetaBasis::KsKl ? 1.0 : 0.0;
    return {limit, limit, limit, 0.0};
  }
  const ZetaBoundResult r = propagate_delta_uncertainty(d, sigma, basis);
  return {r.exact_bound, r.expansion_bound, r.numeric_bound, r.uncertainty};
}

Comparison parse_comparison(std::string_view s) {
  if (s == "within") return Comparison::Within;
  if (s == "at_least") return Comparison::AtLeast;
  if (s == "at_most") return Comparison::AtMost;
  throw ConfigError("unknown comparison '" + std::string(s) + "'");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw ConfigError("unterminated quote in CSV line");
  return fields;
}

double parse_double(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ConfigError(at_line(line) + "expected a number, got '" + s + "'");
  }
  return v;
}

}  // namespace

void ExperimentalInputs::validate() const {
  for (const auto& f : kInputFields) {
    if (!std::isfinite(this->*f.member)) {
      throw InvalidInput(std::string(f.name) + " must be finite");
    }
  }
  if (!(std::abs(delta_l) < 1.0)) throw InvalidInput("delta_l must satisfy |delta_l| < 1");
  if (delta_l_sigma < 0.0) throw InvalidInput("delta_l_sigma must be non-negative");
  const double d = std::abs(delta_l);
  if (d > 0.0 && !(d - delta_l_sigma > 0.0 && d + delta_l_sigma < 1.0)) {
    throw InvalidInput("delta_l +/- delta_l_sigma must stay inside (0, 1) in magnitude");
  }
  for (const double e : {zeta_ksl_err_plus, zeta_ksl_err_minus, zeta_k0_err}) {
    if (!(e > 0.0)) throw InvalidInput("measured zeta errors must be positive");
  }
}

ExperimentalInputs parse_inputs(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(at_line(line_of_offset(json_text, e.byte == 0 ? 0 : e.byte - 1)) +
                      "malformed JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object with ExperimentalInputs fields");
  }
  ExperimentalInputs inputs;
  for (const auto& [key, value] : doc.items()) {
    const auto* field = std::find_if(std::begin(kInputFields), std::end(kInputFields),
                                     [&](const InputField& f) { return key == f.name; });
    if (field == std::end(kInputFields)) {
      throw ConfigError(at_line(line_of_key(json_text, key)) + "unknown field '" + key + "'");
    }
    if (!value.is_number()) {
      throw ConfigError(at_line(line_of_key(json_text, key)) + "field '" + key + "' must be a number");
    }
    inputs.*(field->member) = value.get<double>();
  }
  try {
    inputs.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return inputs;
}

ExperimentalInputs load_inputs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_inputs(buf.str());
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Within: return "within";
    case Comparison::AtLeast: return "at_least";
    case Comparison::AtMost: return "at_most";
  }
  return "within";
}

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

bool ReproductionReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* ReproductionReport::find(std::string_view id) const {
  const auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

std::vector<std::string> report_notes(const ExperimentalInputs& inputs) {
  std::vector<std::string> notes;
  if (inputs.delta_l == 0.0) {
    notes.emplace_back("CP-conserving input: delta_l = 0, zeta bounds take their limits and the Bell inequality holds with equality");
  } else if (inputs.delta_l < 0.0) {
    notes.emplace_back("negative delta_l: the K0 form of the inequality is the violated one; zeta bounds use |delta_l|");
  }
  if (inputs.delta_l_sigma == 0.0) {
    notes.emplace_back("delta_l_sigma = 0: bound uncertainties are zero");
  }
  return notes;
}

ReproductionReport reproduce(const ExperimentalInputs& inputs) {
  inputs.validate();
  ReproductionReport report{inputs, {}};
  for (const auto& f : kInputFields) report.inputs.*f.member = round_significant(inputs.*f.member);
  auto& claims = report.claims;

  // Fixed-convention epsilon inequality at alpha = 0.
  const auto eps_mix = mixing_from_epsilon(std::polar(kEpsilonMagnitude, kEpsilonPhase));
  const auto imag_mix = mixing_from_epsilon({0.0, kEpsilonMagnitude});
  claims.push_back(make_claim("bi_epsilon_violated",
                              "BI at alpha=0 is violated for |eps|=2.28e-3, phase 45 deg (Re eps > |eps|^2)", 1.0,
                              flag(uchiyama_assessment(eps_mix, 0.0).violated), 0.0));
  claims.push_back(make_claim("bi_epsilon_imaginary_satisfied",
                              "BI at alpha=0 holds for purely imaginary eps (Re eps = 0 <= |eps|^2)", 1.0,
                              flag(!uchiyama_assessment(imag_mix, 0.0).violated), 0.0));

  const auto [k1, k2] = cp_eigenstates(0.7);
  const auto k0bar = strangeness_states().second;
  claims.push_back(make_claim("qm_k1_k0bar_quarter", "P(K1, K0bar) = 1/4 on the singlet", 0.25,
                              joint_probability(singlet_strangeness(), k1, k0bar), 1e-12));

  // Phase-optimized inequalities.
  const auto mix = mixing_from_delta(inputs.delta_l);
  const double alpha = optimal_alpha(mix);
  const double reduced = reduced_inequality_margin(mix, alpha);
  const double expected_reduced = std::abs(mix.p()) * std::abs(mix.q()) - std::norm(mix.q());
  claims.push_back(make_claim("bi_optimal_reduces_to_moduli",
                              "at the optimal alpha the reduced margin equals |p||q| - |q|^2", 0.0,
                              std::abs(reduced - expected_reduced), 1e-12, Comparison::AtMost));
  const auto lrt = lrt_bound_check(mix);
  claims.push_back(make_claim("bi_optimal_k0bar_violated",
                              "phase-optimized BI |p| <= |q| (delta <= 0) is violated by delta_l", 1.0,
                              flag(!lrt.p_le_q), 0.0));
  claims.push_back(make_claim("bi_optimal_k0_satisfied", "swapped BI |q| <= |p| holds for delta_l", 1.0,
                              flag(lrt.q_le_p), 0.0));
  claims.push_back(make_claim("lrt_requires_cp_conservation",
                              "both BI forms hold only if |p| = |q|; not the case for delta_l", 0.0,
                              flag(lrt.equality_required), 0.0));

  // Decoherence bounds.
  const double d = std::abs(inputs.delta_l);
  const auto ksl = bounds_for(inputs.delta_l, inputs.delta_l_sigma, ZetaBasis::KsKl);
  const auto k0 = bounds_for(inputs.delta_l, inputs.delta_l_sigma, ZetaBasis::K0K0bar);

  claims.push_back(make_claim("zeta_ksl_bound", "exact zeta lower bound, KS KL basis", kZetaKsKlBound,
                              ksl.exact, 5e-4));
  claims.push_back(make_claim("zeta_ksl_uncertainty", "bound uncertainty from delta_l error, KS KL basis",
                              kZetaKsKlUncertainty, ksl.uncertainty, 0.5e-4));
  claims.push_back(make_claim("zeta_ksl_numeric_agreement", "|bisection - closed form|, KS KL basis", 0.0,
                              std::abs(ksl.numeric - ksl.exact), 1e-9, Comparison::AtMost));
  claims.push_back(make_claim("zeta_ksl_expansion", "exact bound vs 1 - 3 delta/2 within 2 delta^2",
                              ksl.expansion, ksl.exact, 2.0 * d * d));
  claims.push_back(make_claim("zeta_k0_bound", "exact zeta lower bound, K0 K0bar basis", kZetaK0Bound,
                              k0.exact, 2e-4));
  claims.push_back(make_claim("zeta_k0_uncertainty", "bound uncertainty from delta_l error, K0 K0bar basis",
                              kZetaK0Uncertainty, k0.uncertainty, 0.5e-4));
  claims.push_back(make_claim("zeta_k0_numeric_agreement", "|bisection - closed form|, K0 K0bar basis", 0.0,
                              std::abs(k0.numeric - k0.exact), 1e-9, Comparison::AtMost));
  claims.push_back(make_claim("zeta_k0_expansion", "exact bound vs delta within 2 delta^2", k0.expansion,
                              k0.exact, 2.0 * d * d));

  // Experimental zeta values.
  const ZetaBoundResult ksl_result{d, ksl.exact, ksl.expansion, ksl.numeric, ksl.uncertainty, ZetaBasis::KsKl};
  const ZetaBoundResult k0_result{d, k0.exact, k0.expansion, k0.numeric, k0.uncertainty, ZetaBasis::K0K0bar};
  const auto ksl_cmp = compare_with_experiment(ksl_result, inputs.zeta_ksl_measured, inputs.zeta_ksl_err_plus,
                                               inputs.zeta_ksl_err_minus);
  const auto k0_cmp =
      compare_with_experiment(k0_result, inputs.zeta_k0_measured, inputs.zeta_k0_err, inputs.zeta_k0_err);
  claims.push_back(make_claim("zeta_ksl_experiment_excluded",
                              "measured zeta (KS KL) lies at least 5 sigma below the LRT bound", 5.0,
                              ksl_cmp.sigmas, 0.0, Comparison::AtLeast));
  claims.push_back(make_claim("zeta_k0_experiment_compatible",
                              "measured zeta (K0 K0bar) is within 2 sigma of the LRT bound", 2.0, k0_cmp.sigmas,
                              0.0, Comparison::AtMost));

  // Tagging Monte Carlo.
  const auto mc = sample_kl_tags({kMcEvents, kMcSeed, mix});
  const double pull = mc.std_error > 0.0 ? std::abs(mc.delta_hat - inputs.delta_l) / mc.std_error : 0.0;
  claims.push_back(make_claim("mc_delta_consistent",
                              "semileptonic tagging MC (n=1e7, seed 42) reproduces delta_l within 5 std errors", 5.0,
                              pull, 0.0, Comparison::AtMost));
  return report;
}

std::string to_json(const ReproductionReport& report) {
  ordered_json doc;
  ordered_json inputs = ordered_json::object();
  for (const auto& f : kInputFields) inputs[f.name] = report.inputs.*f.member;
  doc["inputs"] = std::move(inputs);
  ordered_json claims = ordered_json::array();
  for (const auto& c : report.claims) {
    ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["paper_value"] = c.paper_value;
    j["computed"] = c.computed;
    j["tolerance"] = c.tolerance;
    j["comparison"] = to_string(c.comparison);
    j["pass"] = c.pass;
    claims.push_back(std::move(j));
  }
  doc["claims"] = std::move(claims);
  return doc.dump(2) + "\n";
}

ReproductionReport report_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    ReproductionReport report;
    for (const auto& f : kInputFields) report.inputs.*f.member = doc.at("inputs").at(f.name).get<double>();
    for (const auto& j : doc.at("claims")) {
      report.claims.push_back({j.at("id").get<std::string>(), j.at("description").get<std::string>(),
                               j.at("paper_value").get<double>(), j.at("computed").get<double>(),
                               j.at("tolerance").get<double>(),
                               parse_comparison(j.at("comparison").get<std::string>()), j.at("pass").get<bool>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_csv(const ReproductionReport& report) {
  std::ostringstream out;
  out << "kind,id,description,paper_value,computed,tolerance,comparison,pass\n";
  for (const auto& f : kInputFields) {
    out << "input," << f.name << ",,," << format_number(report.inputs.*f.member) << ",,,\n";
  }
  for (const auto& c : report.claims) {
    out << "claim," << csv_field(c.id) << ',' << csv_field(c.description) << ',' << format_number(c.paper_value)
        << ',' << format_number(c.computed) << ',' << format_number(c.tolerance) << ',' << to_string(c.comparison)
        << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

ReproductionReport report_from_csv(std::string_view text) {
  ReproductionReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8) {
      throw ConfigError(at_line(line_no) + "expected 8 CSV fields, got " + std::to_string(fields.size()));
    }
    if (fields[0] == "input") {
      const auto* field = std::find_if(std::begin(kInputFields), std::end(kInputFields),
                                       [&](const InputField& f) { return fields[1] == f.name; });
      if (field == std::end(kInputFields)) throw ConfigError(at_line(line_no) + "unknown input '" + fields[1] + "'");
      report.inputs.*(field->member) = parse_double(fields[4], line_no);
    } else if (fields[0] == "claim") {
      if (fields[7] != "true" && fields[7] != "false") {
        throw ConfigError(at_line(line_no) + "pass must be true or false");
      }
      report.claims.push_back({fields[1], fields[2], parse_double(fields[3], line_no),
                               parse_double(fields[4], line_no), parse_double(fields[5], line_no),
                               parse_comparison(fields[6]), fields[7] == "true"});
    } else {
      throw ConfigError(at_line(line_no) + "unknown row kind '" + fields[0] + "'");
    }
  }
  return report;
}

std::string to_table(const ReproductionReport& report) {
  std::ostringstream out;
  char buf[256];
  out << "Inputs\n";
  for (const auto& f : kInputFields) {
    std::snprintf(buf, sizeof buf, "  %-20s %.6g\n", f.name, report.inputs.*f.member);
    out << buf;
  }
  for (const auto& note : report_notes(report.inputs)) out << "  note: " << note << '\n';
  out << '\n';
  std::snprintf(buf, sizeof buf, "%-32s %-14s %-14s %-10s %s\n", "claim", "published", "computed", "accept",
                "result");
  out << buf;
  for (const auto& c : report.claims) {
    // Bounds at the published 4 decimals, uncertainties at 2 significant digits.
    const bool is_bound = c.id.ends_with("_bound");
    const bool is_uncertainty = c.id.ends_with("_uncertainty");
    const char* fmt = is_bound ? "%.4f" : is_uncertainty ? "%.2g" : "%.6g";
    char target[32], computed[32];
    std::snprintf(target, sizeof target, is_bound || is_uncertainty ? "%g" : fmt, c.paper_value);
    std::snprintf(computed, sizeof computed, fmt, c.computed);
    // One-sided claims show the threshold itself.
    const char* cmp = c.comparison == Comparison::Within ? "+/-" : c.comparison == Comparison::AtLeast ? ">=" : "<=";
    const double shown = c.comparison == Comparison::Within    ? c.tolerance
                         : c.comparison == Comparison::AtLeast ? c.paper_value - c.tolerance
                                                               : c.paper_value + c.tolerance;
    std::snprintf(buf, sizeof buf, "%-32s %-14s %-14s %-3s%-7.2g %s\n", c.id.c_str(), target, computed, cmp, shown,
                  c.pass ? "PASS" : "FAIL");
    out << buf;
  }
  out << '\n' << (report.all_pass() ? "all claims reproduced" : "some claims FAILED") << '\n';
  return out.str();
}

}  // namespace kaonbell
