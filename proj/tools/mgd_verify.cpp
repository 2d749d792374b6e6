// mgd-verify: runs verification suites and writes a JSON report.
//
//   mgd-verify run [suite] [--seed N] [--samples N] [--group G]... [--tolerance k=v]...
//   mgd-verify list
//   mgd-verify explain <check-id>
//
// Exit status: 0 pass, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgd/errors.hpp"
#include "mgd/suite.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::optional<std::string> suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<std::string> out;
  std::string config_path;
  std::vector<std::string> tolerances;
  std::vector<std::string> groups;
};

mgd::SuiteConfig resolve(const Flags& f) {
  mgd::SuiteConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw mgd::ConfigurationError("cannot open config file '" + f.config_path + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw mgd::ConfigurationError("config file '" + f.config_path + "': " + e.what());
    }
    mgd::apply_config_json(cfg, doc);
  }
  if (f.suite) cfg.suite = *f.suite;
  if (f.seed) cfg.seed = *f.seed;
  if (f.samples) cfg.samples = *f.samples;
  if (f.out) cfg.out = *f.out;
  if (!f.groups.empty()) cfg.groups = f.groups;
  for (const auto& kv : f.tolerances) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw mgd::ConfigurationError("--tolerance expects name=value, got '" + kv + "'");
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
    } catch (const std::exception&) {
      throw mgd::ConfigurationError("--tolerance value is not a number: '" + kv + "'");
    }
    cfg.tol.set(kv.substr(0, eq), value);
  }
  return cfg;
}

int run(const Flags& flags) {
  const mgd::SuiteConfig cfg = resolve(flags);
  const mgd::SuiteReport report = mgd::run_suite(cfg);
  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw mgd::ConfigurationError("cannot write report to '" + cfg.out + "'");
    out << text;
  }
  std::cerr << mgd::summary_table(report);
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify metric groups, homomorphism spaces and derivatives"};
  app.require_subcommand(1);
  Flags flags;
  std::string check_id;

  app.add_option("--suite", flags.suite, "suite name")->check(CLI::IsMember(mgd::suite_names()));
  app.add_option("--seed", flags.seed, "root seed");
  app.add_option("--samples", flags.samples, "samples per check");
  app.add_option("--out", flags.out, "report path (default: stdout)");
  app.add_option("--config", flags.config_path, "JSON config file; flags override it");
  app.add_option("--tolerance", flags.tolerances, "name=value, repeatable");
  app.add_option("--group", flags.groups, "group name, repeatable");

  auto* run_cmd = app.add_subcommand("run", "run a suite");
  run_cmd->fallthrough();
  run_cmd->add_option("suite", flags.suite, "suite name")->check(CLI::IsMember(mgd::suite_names()));
  auto* list_cmd = app.add_subcommand("list", "list groups, functions, slopes and suites");
  list_cmd->fallthrough();
  auto* explain_cmd = app.add_subcommand("explain", "show anchor and tolerances of a check");
  explain_cmd->fallthrough();
  explain_cmd->add_option("check-id", check_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*list_cmd) {
      std::cout << mgd::list_registry();
      return 0;
    }
    if (*explain_cmd) {
      std::cout << mgd::explain(resolve(flags), check_id);
      return 0;
    }
    return run(flags);
  } catch (const mgd::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
