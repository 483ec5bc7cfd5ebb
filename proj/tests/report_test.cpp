#include "qlogic/report.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlogic/algorithms.hpp"
#include "qlogic/truth_table.hpp"

namespace {

using qlogic::Rng;
using qlogic::run_report_from_json;
using qlogic::RunReport;
using qlogic::ShorOptions;
using qlogic::to_json;
using qlogic::to_text;
using qlogic::TruthTable;

RunReport sample_deutsch_report() {
  Rng rng(12);
  return qlogic::deutsch_xor(TruthTable{2, 2, {0, 1}}, rng);
}

RunReport sample_shor_report() {
  Rng rng(13);
  ShorOptions options;
  options.forced_a = 7;
  options.s = 64;
  return qlogic::shor_factor(15, rng, options);
}

TEST(ReportJson, DeutschRoundTrip) {
  const RunReport report = sample_deutsch_report();
  const RunReport back = run_report_from_json(to_json(report));
  EXPECT_EQ(report, back);
}

TEST(ReportJson, ShorRoundTripKeepsRounds) {
  const RunReport report = sample_shor_report();
  const RunReport back = run_report_from_json(to_json(report));
  EXPECT_EQ(report, back);
  ASSERT_FALSE(back.rounds.empty());
  EXPECT_EQ(back.rounds.back().factors, (std::vector<std::int64_t>{3, 5}));
}

TEST(ReportJson, SimonRoundTrip) {
  Rng table_rng(1);
  const TruthTable f = qlogic::make_simon_instance(3, 0b011, table_rng);
  Rng rng(2);
  const RunReport report = qlogic::simon(f, 3, rng);
  EXPECT_EQ(report, run_report_from_json(to_json(report)));
}

TEST(ReportJson, EqualReportsSerializeToIdenticalBytes) {
  const std::string once = to_json(sample_shor_report());
  const std::string again = to_json(sample_shor_report());
  EXPECT_EQ(once, again);
}

TEST(ReportJson, FactoringVerdictIsTheFactorArray) {
  const RunReport report = sample_shor_report();
  const auto j = nlohmann::json::parse(to_json(report));
  ASSERT_TRUE(j.at("verdict").is_array());
  EXPECT_EQ(j["verdict"].get<std::vector<std::int64_t>>(),
            (std::vector<std::int64_t>{3, 5}));
  // The reconstructed struct carries both forms.
  const RunReport back = run_report_from_json(to_json(report));
  EXPECT_EQ(back.verdict, "3,5");
  EXPECT_EQ(back.factors, (std::vector<std::int64_t>{3, 5}));
}

TEST(ReportJson, NonFactoringVerdictStaysAString) {
  const auto j = nlohmann::json::parse(to_json(sample_deutsch_report()));
  EXPECT_TRUE(j.at("verdict").is_string());
}

TEST(ReportJson, FieldLayout) {
  const RunReport deutsch = sample_deutsch_report();
  const auto j = nlohmann::json::parse(to_json(deutsch));
  EXPECT_EQ(j.at("schema_version").get<int>(), 1);
  EXPECT_EQ(j.at("algorithm").get<std::string>(), "deutsch_xor");
  ASSERT_TRUE(j.at("trace").is_array());
  for (const auto& entry : j["trace"]) {
    EXPECT_TRUE(entry.contains("register"));
    EXPECT_TRUE(entry.contains("outcome"));
    EXPECT_TRUE(entry.contains("probability"));
  }
  ASSERT_TRUE(j.at("geometry").is_array());
  EXPECT_TRUE(j.contains("trials_used"));
  EXPECT_TRUE(j.contains("seed"));
  // Rounds appear only on factoring reports.
  EXPECT_FALSE(j.contains("rounds"));
  const auto shor = nlohmann::json::parse(to_json(sample_shor_report()));
  EXPECT_TRUE(shor.contains("rounds"));
}

TEST(ReportJson, SeedSurvivesTheRoundTrip) {
  RunReport report = sample_deutsch_report();
  report.seed = 0xDEADBEEFCAFEBABEull;  // above int64 range on purpose
  const RunReport back = run_report_from_json(to_json(report));
  EXPECT_EQ(back.seed, 0xDEADBEEFCAFEBABEull);
}

TEST(ReportJson, ParseErrorsNameTheProblem) {
  EXPECT_THROW(run_report_from_json("not json at all"), std::invalid_argument);
  EXPECT_THROW(run_report_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(run_report_from_json(R"({"schema_version": 2})"),
               std::invalid_argument);
  try {
    run_report_from_json(R"({"schema_version": 1, "verdict": "x"})");
    FAIL() << "missing field accepted";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("algorithm"), std::string::npos);
  }
  // Wrong type for a required field is rejected, not coerced.
  EXPECT_THROW(run_report_from_json(
                   R"({"schema_version": 1, "algorithm": "x", "verdict": "y",
                       "conclusive": "yes", "trace": [], "geometry": [],
                       "trials_used": 0, "seed": 0})"),
               std::invalid_argument);
}

TEST(ReportJson, MinimalHandWrittenReportParses) {
  const RunReport report = run_report_from_json(
      R"({"schema_version": 1, "algorithm": "deutsch_cleve",
          "verdict": "balanced", "conclusive": true,
          "trace": [{"register": 0, "outcome": 1, "probability": 1.0}],
          "geometry": [{"name": "output_minus_ray", "dimension": 1,
                        "contains_final": true}],
          "trials_used": 1, "seed": 4})");
  EXPECT_EQ(report.algorithm, "deutsch_cleve");
  EXPECT_TRUE(report.conclusive);
  ASSERT_EQ(report.trace.size(), 1u);
  EXPECT_EQ(report.trace[0].outcome, 1);
  ASSERT_EQ(report.geometry.size(), 1u);
  EXPECT_EQ(report.geometry[0].name, "output_minus_ray");
  EXPECT_EQ(report.seed, 4u);
  EXPECT_TRUE(report.rounds.empty());
}

TEST(ReportText, SummarizesVerdictTraceAndRounds) {
  const std::string text = to_text(sample_shor_report());
  EXPECT_NE(text.find("shor_factor: 3,5 (conclusive)"), std::string::npos);
  EXPECT_NE(text.find("rounds:"), std::string::npos);
  EXPECT_NE(text.find("a=7"), std::string::npos);
  EXPECT_NE(text.find("factors 3,5"), std::string::npos);

  RunReport inconclusive;
  inconclusive.algorithm = "simon";
  inconclusive.verdict = "inconclusive";
  const std::string plain = to_text(inconclusive);
  EXPECT_NE(plain.find("simon: inconclusive (inconclusive)"),
            std::string::npos);
  EXPECT_EQ(plain.find("rounds:"), std::string::npos);
}

TEST(ReportText, MarksLuckyRounds) {
  Rng rng(2);
  ShorOptions options;
  options.forced_a = 5;
  const std::string text = to_text(qlogic::shor_factor(15, rng, options));
  EXPECT_NE(text.find("shares a factor with N"), std::string::npos);
}

}  // namespace
