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

#ifndef GSSF_REPORT_FORMAT_HPP_
#define GSSF_REPORT_FORMAT_HPP_

#include <string>

#include "gssf/verifier.hpp"

namespace gssf {

/// JSON report with keys config, checks, errata, duration_ms (in that
/// order). With include_duration = false the last key is omitted, which
/// makes equal configs produce equal strings.
std::string to_json(const RunReport& report, bool include_duration = true);

/// Human-readable tables.
std::string to_text(const RunReport& report);

/// Dispatches on report.config.format.
std::string format_report(const RunReport& report);

}  // namespace gssf

#endif  // GSSF_REPORT_FORMAT_HPP_
