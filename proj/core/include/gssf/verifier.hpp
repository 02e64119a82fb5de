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

#ifndef GSSF_VERIFIER_HPP_
#define GSSF_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gssf/connections.hpp"
#include "gssf/contact_geometry.hpp"
#include "gssf/errata.hpp"
#include "gssf/invariants.hpp"

namespace gssf {

enum class Suite {
  kStructure,
  kCurvature,
  kSubmanifold,
  kRicci,
  kScalar,
  kTheorems,
  kErrata,
  kAll,
};
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

enum class OutputFormat { kText, kJson };
std::string_view to_string(OutputFormat f);

struct RunConfig {
  Suite suite = Suite::kAll;
  int n = 3;
  int m = 2;
  std::optional<ConnectionKind> connection;  // all kinds when empty
  std::uint64_t seed = 42;
  int trials = 100;
  double tol = 1e-9;
  ParamMode params = RandomParams{};
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> out;
  RicciConvention convention = RicciConvention::kFirstLast;
  // Execution option only: never echoed, never changes the report.
  int threads = 1;
};

/// Empty when the config is usable, else a usage message.
std::string validate_config(const RunConfig& config);

enum class Verdict {
  kPass,      // oracle-adjudicated, within tol
  kFail,      // oracle-adjudicated, outside tol
  kHolds,     // printed claim, consistent with the oracle
  kViolated,  // printed claim, contradicted by the oracle
};
std::string_view to_string(Verdict v);

struct CheckWitness {
  int trial = 0;
  std::string configuration;
  double residual = 0.0;
};

struct CheckRecord {
  std::string name;
  std::string citation;
  std::string variant;
  int trials = 0;
  double max_residual = 0.0;
  Verdict verdict = Verdict::kPass;
  std::optional<CheckWitness> witness;

  bool adjudicated() const {
    return verdict == Verdict::kPass || verdict == Verdict::kFail;
  }
};

struct RunReport {
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::vector<ErrataEntry> errata;
  double duration_ms = 0.0;

  /// True when no oracle-adjudicated check failed. Claims and errata are
  /// informational.
  bool ok() const;
};

/// Runs the selected suites against canonical_structure(config.n). Throws
/// Error on an invalid config.
RunReport run(const RunConfig& config);

/// 0 when report.ok(), else 1.
int exit_code(const RunReport& report);

}  // namespace gssf

#endif  // GSSF_VERIFIER_HPP_
