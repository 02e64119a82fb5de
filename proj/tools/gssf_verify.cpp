// Copyright 2026 The gssf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gssf-verify: runs the verification suites and prints a report.
//
// Exit codes: 0 all oracle-adjudicated checks pass, 1 some check failed,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gssf/report_format.hpp"
#include "gssf/verifier.hpp"

namespace {

constexpr int kUsageError = 2;

int usage_error(const std::string& message) {
  std::cerr << "gssf-verify: " << message << "\n";
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify curvature identities of submanifolds of generalized Sasakian-space-forms"};

  gssf::RunConfig config;
  std::string suite = "all";
  std::string connection;
  std::string format = "text";
  std::string convention = "first_last";
  std::string out;
  double f1 = 0.0, f2 = 0.0, f3 = 0.0;
  double sasakian_c = 0.0;
  std::vector<double> random_range;

  app.add_option("--suite", suite, "structure|curvature|submanifold|ricci|scalar|theorems|errata|all")
      ->capture_default_str();
  app.add_option("--n", config.n, "ambient dimension is 2n+1 (n >= 2)")->capture_default_str();
  app.add_option("--m", config.m, "submanifold dimension is m+1 (1 <= m <= 2n-1)")
      ->capture_default_str();
  app.add_option("--connection", connection,
                 "levi_civita|semisymmetric_metric|semisymmetric_non_metric|"
                 "schouten_van_kampen|tanaka_webster (default: all)");
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--trials", config.trials, "random trials per check")->capture_default_str();
  app.add_option("--tol", config.tol, "absolute tolerance")->capture_default_str();
  auto* opt_f1 = app.add_option("--f1", f1, "fixed f1");
  auto* opt_f2 = app.add_option("--f2", f2, "fixed f2");
  auto* opt_f3 = app.add_option("--f3", f3, "fixed f3");
  auto* opt_c = app.add_option("--sasakian-c", sasakian_c, "Sasakian-space-form constant c");
  auto* opt_random = app.add_option("--random-params", random_range,
                                    "draw f1, f2, f3 uniformly from [LO, HI] (default -2 2)")
                         ->expected(2);
  opt_c->excludes(opt_f1)->excludes(opt_f2)->excludes(opt_f3)->excludes(opt_random);
  opt_random->excludes(opt_f1)->excludes(opt_f2)->excludes(opt_f3);
  app.add_option("--format", format, "text|json")->capture_default_str();
  app.add_option("--out", out, "write the report to this file instead of stdout");
  app.add_option("--ricci-convention", convention, "first_last|last_first")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads (does not change the report)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  const auto parsed_suite = gssf::parse_suite(suite);
  if (!parsed_suite) return usage_error("unknown suite '" + suite + "'");
  config.suite = *parsed_suite;

  if (!connection.empty()) {
    const auto kind = gssf::parse_connection_kind(connection);
    if (!kind) return usage_error("unknown connection '" + connection + "'");
    config.connection = *kind;
  }

  if (format == "text") {
    config.format = gssf::OutputFormat::kText;
  } else if (format == "json") {
    config.format = gssf::OutputFormat::kJson;
  } else {
    return usage_error("unknown format '" + format + "'");
  }

  if (convention == "first_last") {
    config.convention = gssf::RicciConvention::kFirstLast;
  } else if (convention == "last_first") {
    config.convention = gssf::RicciConvention::kLastFirst;
  } else {
    return usage_error("unknown Ricci convention '" + convention + "'");
  }

  const size_t fixed_count = opt_f1->count() + opt_f2->count() + opt_f3->count();
  if (fixed_count > 0) {
    if (fixed_count != 3) return usage_error("--f1, --f2 and --f3 must be given together");
    config.params = gssf::FixedParams{{f1, f2, f3}};
  } else if (opt_c->count() > 0) {
    config.params = gssf::SasakianParams{sasakian_c};
  } else if (opt_random->count() > 0) {
    config.params = gssf::RandomParams{random_range.at(0), random_range.at(1)};
  }

  if (!out.empty()) config.out = out;
  if (const std::string problem = gssf::validate_config(config); !problem.empty()) {
    return usage_error(problem);
  }

  gssf::RunReport report;
  try {
    report = gssf::run(config);
  } catch (const gssf::Error& e) {
    std::cerr << "gssf-verify: " << e.what() << "\n";
    return 1;
  }

  const std::string text = gssf::format_report(report);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) return usage_error("cannot write '" + *config.out + "'");
    file << text;
  } else {
    std::cout << text;
  }
  return gssf::exit_code(report);
}
