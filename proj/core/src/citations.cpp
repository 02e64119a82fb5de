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

#include "gssf/citations.hpp"

namespace gssf {
namespace {

// Section holding the results for each deformed connection; 0 for none.
int section(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::kSemisymmetricMetric: return 3;
    case ConnectionKind::kSemisymmetricNonMetric: return 4;
    case ConnectionKind::kSchoutenVanKampen: return 5;
    case ConnectionKind::kTanakaWebster: return 6;
    case ConnectionKind::kLeviCivita: break;
  }
  return 0;
}

std::string curvature_equation(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::kLeviCivita: return "Eq. 1.1";
    case ConnectionKind::kSemisymmetricMetric: return "Eq. 2.11";
    case ConnectionKind::kSemisymmetricNonMetric: return "Eq. 2.13";
    case ConnectionKind::kSchoutenVanKampen: return "Eq. 2.15";
    case ConnectionKind::kTanakaWebster: return "Eq. 2.17";
  }
  return "";
}

std::string gauss_equation(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::kLeviCivita: return "Eq. 2.9";
    case ConnectionKind::kSemisymmetricMetric: return "Eq. 2.9a";
    case ConnectionKind::kSemisymmetricNonMetric: return "Eq. 2.9b";
    case ConnectionKind::kSchoutenVanKampen: return "Eq. 2.9c";
    case ConnectionKind::kTanakaWebster: return "Eq. 2.9d";
  }
  return "";
}

}  // namespace

std::string citation(Formula formula, ConnectionKind kind) {
  const std::string s = std::to_string(section(kind));
  const bool printed = section(kind) != 0;
  switch (formula) {
    case Formula::kStructure: return "Eqs. 2.1-2.4";
    case Formula::kCurvature: return curvature_equation(kind);
    case Formula::kSlantIdentity: return "Eq. 2.10b";
    case Formula::kGauss: return gauss_equation(kind);
    case Formula::kScalarDefinition:
      return printed ? "Eq. " + s + ".7" : "Eq. 3.7 (Levi-Civita analogue)";
    default: break;
  }
  if (!printed) return "derived only (no printed Levi-Civita form)";
  switch (formula) {
    case Formula::kRicciGeneral: return "Lemma " + s + ".1 (Eq. " + s + ".1)";
    case Formula::kRicciAsi: return "Lemma " + s + ".2 (Eq. " + s + ".2)";
    case Formula::kRicciSasakian: return "Corollary " + s + ".3 (Eq. " + s + ".3)";
    case Formula::kScalar: return "Eq. " + s + ".4";
    case Formula::kTheoremRicci: return "Theorem " + s + ".1 (i)";
    case Formula::kTheoremScalar: return "Theorem " + s + ".1 (ii)";
    case Formula::kMinimality: return "Eq. " + s + ".5";
    case Formula::kSlackIdentity: return "Eq. " + s + ".6";
    case Formula::kEquality: return "Remark after Theorem " + s + ".1";
    default: break;
  }
  return "";
}

}  // namespace gssf
