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

#ifndef GSSF_CITATIONS_HPP_
#define GSSF_CITATIONS_HPP_

#include <string>

#include "gssf/connections.hpp"

namespace gssf {

/// Formulas that reports attach a reference label to.
enum class Formula {
  kStructure,
  kCurvature,
  kSlantIdentity,
  kGauss,
  kRicciGeneral,
  kRicciAsi,
  kRicciSasakian,
  kScalar,
  kScalarDefinition,
  kTheoremRicci,
  kTheoremScalar,
  kMinimality,
  kSlackIdentity,
  kEquality,
};

/// Reference label used in the "citation" and "location" report fields.
std::string citation(Formula formula,
                     ConnectionKind kind = ConnectionKind::kLeviCivita);

}  // namespace gssf

#endif  // GSSF_CITATIONS_HPP_
