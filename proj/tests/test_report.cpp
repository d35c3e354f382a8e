#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "kaonbell/report.hpp"

using namespace kaonbell;

namespace {

const std::vector<std::string> kClaimIds = {
    "bi_epsilon_violated",        "bi_epsilon_imaginary_satisfied", "qm_k1_k0bar_quarter",
    "bi_optimal_reduces_to_moduli", "bi_optimal_k0bar_violated",    "bi_optimal_k0_satisfied",
    "lrt_requires_cp_conservation", "zeta_ksl_bound",               "zeta_ksl_uncertainty",
    "zeta_ksl_numeric_agreement", "zeta_ksl_expansion",             "zeta_k0_bound",
    "zeta_k0_uncertainty",        "zeta_k0_numeric_agreement",      "zeta_k0_expansion",
    "zeta_ksl_experiment_excluded", "zeta_k0_experiment_compatible", "mc_delta_consistent",
};

const ReproductionReport& default_report() {
  static const ReproductionReport r = reproduce(ExperimentalInputs{});
  return r;
}

std::string config_error(std::string_view text) {
  try {
    parse_inputs(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("default inputs reproduce every claim") {
  const auto& r = default_report();
  CHECK(r.all_pass());
  REQUIRE(r.claims.size() == kClaimIds.size());
  std::set<std::string> seen;
  for (const auto& c : r.claims) {
    CAPTURE(c.id);
    CHECK(c.pass);
    CHECK(seen.insert(c.id).second);
  }
  for (const auto& id : kClaimIds) CHECK(r.find(id) != nullptr);
  CHECK(r.find("nope") == nullptr);

  CHECK(r.find("zeta_ksl_bound")->computed == doctest::Approx(0.99510034209354609).epsilon(1e-11));
  CHECK(r.find("zeta_k0_bound")->computed == doctest::Approx(0.0032646709901545349).epsilon(1e-11));
  CHECK(r.find("zeta_ksl_experiment_excluded")->computed == doctest::Approx(5.406877138).epsilon(1e-9));
  CHECK(r.find("zeta_k0_experiment_compatible")->computed == 0.0);
}

TEST_CASE("one-sided and two-sided comparisons") {
  CHECK(std::string(to_string(Comparison::Within)) == "within");
  CHECK(std::string(to_string(Comparison::AtLeast)) == "at_least");
  CHECK(std::string(to_string(Comparison::AtMost)) == "at_most");
  const auto& r = default_report();
  CHECK(r.find("zeta_ksl_experiment_excluded")->comparison == Comparison::AtLeast);
  CHECK(r.find("zeta_k0_experiment_compatible")->comparison == Comparison::AtMost);
  CHECK(r.find("zeta_ksl_bound")->comparison == Comparison::Within);
}

TEST_CASE("twelve significant digits") {
  CHECK(round_significant(0.99510034209354609) == 0.995100342094);
  CHECK(round_significant(1.0 / 3.0) == 0.333333333333);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(-2.5e-17) == -2.5e-17);
}

TEST_CASE("serialization round trips") {
  const auto& r = default_report();
  SUBCASE("json") {
    const std::string text = to_json(r);
    CHECK(report_from_json(text) == r);
    CHECK(to_json(report_from_json(text)) == text);
    CHECK(text.find("\"comparison\"") != std::string::npos);
  }
  SUBCASE("csv") {
    const std::string text = to_csv(r);
    CHECK(text.starts_with("kind,id,description,paper_value,computed,tolerance,comparison,pass\n"));
    CHECK(report_from_csv(text) == r);
    CHECK(to_csv(report_from_csv(text)) == text);
  }
  SUBCASE("json output is deterministic") {
    CHECK(to_json(reproduce(ExperimentalInputs{})) == to_json(r));
  }
  SUBCASE("malformed report text") {
    CHECK_THROWS_AS(report_from_json("{"), ConfigError);
    CHECK_THROWS_AS(report_from_csv("kind,id\nclaim,x\n"), ConfigError);
  }
}

TEST_CASE("table") {
  const std::string t = to_table(default_report());
  CHECK(t.find("zeta_ksl_bound") != std::string::npos);
  CHECK(t.find("0.9951") != std::string::npos);
  CHECK(t.find("all claims reproduced") != std::string::npos);
  CHECK(t.find("FAIL") == std::string::npos);
}

TEST_CASE("config parsing") {
  CHECK(parse_inputs("{}") == ExperimentalInputs{});
  const auto partial = parse_inputs(R"({"delta_l": 0.002, "zeta_k0_err": 0.5})");
  CHECK(partial.delta_l == 0.002);
  CHECK(partial.zeta_k0_err == 0.5);
  CHECK(partial.zeta_ksl_measured == 0.13);

  CHECK(config_error("{\n  \"delta_l\": 3e-3,\n  \"bogus\": 1\n}") == "line 3: unknown field 'bogus'");
  CHECK(config_error("{\n  \"delta_l\": \"x\"\n}") == "line 2: field 'delta_l' must be a number");
  CHECK(config_error("{\n  \"delta_l\": 3e-3,\n  \"x\"\n}").starts_with("line 4: malformed JSON"));
  CHECK(config_error("[1, 2]").find("JSON object") != std::string::npos);
  CHECK_FALSE(config_error(R"({"delta_l": 1.0})").empty());
  CHECK_FALSE(config_error(R"({"delta_l_sigma": -1e-4})").empty());
  CHECK_FALSE(config_error(R"({"delta_l": 1e-4})").empty());  // 1e-4 - 1.2e-4 < 0
  CHECK_FALSE(config_error(R"({"zeta_ksl_err_plus": 0})").empty());
  CHECK(config_error(R"({"delta_l": 0.0})").empty());

  CHECK_THROWS_AS(load_inputs("/nonexistent/inputs.json"), ConfigError);
  const auto path = std::filesystem::temp_directory_path() / "kaonbell_test_inputs.json";
  {
    std::ofstream out(path);
    out << R"({"delta_l_sigma": 0.0})";
  }
  CHECK(load_inputs(path).delta_l_sigma == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("CP-conserving input") {
  ExperimentalInputs in;
  in.delta_l = 0.0;
  const auto r = reproduce(in);
  CHECK(r.find("zeta_ksl_bound")->computed == 1.0);
  CHECK(r.find("zeta_k0_bound")->computed == 0.0);
  CHECK(r.find("zeta_ksl_uncertainty")->computed == 0.0);
  CHECK(r.find("bi_optimal_k0_satisfied")->pass);
  CHECK_FALSE(r.find("bi_optimal_k0bar_violated")->pass);
  CHECK_FALSE(r.all_pass());
  const auto notes = report_notes(in);
  REQUIRE_FALSE(notes.empty());
  CHECK(notes.front().starts_with("CP-conserving input"));
  CHECK(to_table(r).find("CP-conserving input") != std::string::npos);
}

TEST_CASE("zero delta uncertainty") {
  ExperimentalInputs in;
  in.delta_l_sigma = 0.0;
  const auto r = reproduce(in);
  CHECK(r.find("zeta_ksl_uncertainty")->computed == 0.0);
  CHECK(r.find("zeta_k0_uncertainty")->computed == 0.0);
  CHECK(r.find("zeta_ksl_bound")->pass);
}

TEST_CASE("negative delta mirrors the positive case") {
  ExperimentalInputs in;
  in.delta_l = -3.27e-3;
  const auto r = reproduce(in);
  CHECK(r.find("zeta_ksl_bound")->computed == default_report().find("zeta_ksl_bound")->computed);
  CHECK_FALSE(r.find("bi_optimal_k0_satisfied")->pass);
  CHECK_FALSE(report_notes(in).empty());
}

TEST_CASE("a measurement far from the published one fails claims") {
  ExperimentalInputs in;
  in.zeta_ksl_measured = 0.99;
  const auto r = reproduce(in);
  CHECK_FALSE(r.find("zeta_ksl_experiment_excluded")->pass);
  CHECK_FALSE(r.all_pass());
}
