#include <gtest/gtest.h>

#include "mgd/errors.hpp"
#include "mgd/suite.hpp"

using namespace mgd;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.samples = 200;
  return cfg;
}

}  // namespace

TEST(Suite, DefaultGroupsPass) {
  const auto report = run_suite(small("all"));
  EXPECT_TRUE(report.passed()) << summary_table(report);
  EXPECT_TRUE(std::is_sorted(report.entries.begin(), report.entries.end(),
                             [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
  for (const auto& e : report.entries) EXPECT_FALSE(e.anchor.empty()) << e.check_id;
}

TEST(Suite, ZeroAbsoluteFactorizationToleranceStillPasses) {
  auto cfg = small("derivative");
  cfg.tol.set("fact", 0.0);
  EXPECT_TRUE(run_suite(cfg).passed());
}

TEST(Suite, VerdictFollowsEntries) {
  auto cfg = small("axioms");
  cfg.tol.set("limit", 1e-9);
  const auto report = run_suite(cfg);
  EXPECT_FALSE(report.passed());
  std::size_t failed = 0;
  for (const auto& e : report.entries) failed += e.passed ? 0 : 1;
  EXPECT_EQ(failed, report.failures);
  EXPECT_EQ(report.comparison_json()["overall"], "fail");
}

TEST(Suite, UnknownNamesAreConfigurationErrors) {
  auto cfg = small("all");
  cfg.groups = {"nope"};
  try {
    run_suite(cfg);
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
  }
  EXPECT_THROW(run_suite(small("bogus")), ConfigurationError);
  EXPECT_THROW(explain(small("all"), "no.such.check"), ConfigurationError);
}

TEST(Suite, ChildSeedsIsolateChecks) {
  auto one = small("axioms");
  one.groups = {"real-add"};
  auto two = one;
  two.groups = {"real-add", "circle"};
  const auto a = run_suite(one).comparison_json()["entries"];
  const auto b = run_suite(two).comparison_json()["entries"];
  for (const auto& ea : a) {
    bool found = false;
    for (const auto& eb : b) {
      if (eb["check_id"] == ea["check_id"]) {
        EXPECT_EQ(ea.dump(), eb.dump());
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(Suite, SerialAndParallelReportsMatch) {
  auto cfg = small("theorems");
  const auto par = run_suite(cfg).comparison_json().dump();
  cfg.exec = Exec::serial;
  EXPECT_EQ(run_suite(cfg).comparison_json().dump(), par);
}

TEST(Suite, ReportShape) {
  const auto j = run_suite(small("homspace")).to_json();
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["artifact_version"], std::string(kArtifactVersion));
  EXPECT_TRUE(j["timing"]["wall_clock_seconds"].is_number());
  EXPECT_EQ(j["config"]["suite"], "homspace");
}

TEST(Config, JsonOverlay) {
  SuiteConfig cfg;
  apply_config_json(cfg, nlohmann::json::parse(R"({"seed": 9, "samples": 50,
      "tolerances": {"fp": 1e-8}, "groups": ["circle"], "probe": {"count": 16}})"));
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.samples, 50u);
  EXPECT_EQ(cfg.tol.fp, 1e-8);
  EXPECT_EQ(cfg.probe.count, 16u);
  EXPECT_THROW(apply_config_json(cfg, nlohmann::json::parse(R"({"colour": 1})")), ConfigurationError);
  EXPECT_THROW(apply_config_json(cfg, nlohmann::json::parse(R"({"seed": "x"})")), ConfigurationError);
  EXPECT_THROW(apply_config_json(cfg, nlohmann::json::parse(R"({"tolerances": {"zzz": 1}})")), ConfigurationError);
}

TEST(Registry, Listing) {
  const std::string text = list_registry();
  for (const char* name : {"real-add", "pos-real-mul", "complex-mul", "circle", "matrix-add:n", "square-matrix",
                           "cube-circle", "const", "identity", "axioms", "homspace", "derivative", "theorems", "all"}) {
    EXPECT_NE(text.find(std::string("  ") + name + "\n"), std::string::npos) << name;
  }
  EXPECT_EQ(list_registry(), text);
}

TEST(Registry, ExplainNamesAnchorAndTolerances) {
  const std::string text = explain(SuiteConfig{}, "theorems.chain.square-matrix");
  EXPECT_NE(text.find("anchor:"), std::string::npos);
  EXPECT_NE(text.find("fact = 1e-10"), std::string::npos);
}
