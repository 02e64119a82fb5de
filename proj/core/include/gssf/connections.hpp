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

#ifndef GSSF_CONNECTIONS_HPP_
#define GSSF_CONNECTIONS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gssf/contact_geometry.hpp"
#include "gssf/frame_algebra.hpp"
#include "gssf/sampler.hpp"

namespace gssf {

enum class ConnectionKind {
  kLeviCivita,
  kSemisymmetricMetric,
  kSemisymmetricNonMetric,
  kSchoutenVanKampen,
  kTanakaWebster,
};

inline constexpr std::array<ConnectionKind, 5> kAllConnections = {
    ConnectionKind::kLeviCivita, ConnectionKind::kSemisymmetricMetric,
    ConnectionKind::kSemisymmetricNonMetric, ConnectionKind::kSchoutenVanKampen,
    ConnectionKind::kTanakaWebster};

inline constexpr std::array<ConnectionKind, 4> kDeformedConnections = {
    ConnectionKind::kSemisymmetricMetric, ConnectionKind::kSemisymmetricNonMetric,
    ConnectionKind::kSchoutenVanKampen, ConnectionKind::kTanakaWebster};

/// Stable snake_case identifier, e.g. "schouten_van_kampen".
std::string_view to_string(ConnectionKind kind);
std::optional<ConnectionKind> parse_connection_kind(std::string_view name);

// All derivatives below treat f1, f2, f3 as constant at the evaluation point
// (df = 0), so covariant derivatives of the deformation carry no df terms.

/// D(X, Y) = (deformed connection - Levi-Civita)_X Y.
Vector deformation(ConnectionKind kind, const AlmostContactStructure& acs,
                   const SpaceFormParams& params, const Vector& x,
                   const Vector& y);

/// (nabla_X phi) Y = (f1 - f3)[g(X, Y) xi - eta(Y) X].
Vector structure_derivative_phi(const AlmostContactStructure& acs,
                                const SpaceFormParams& params, const Vector& x,
                                const Vector& y);

/// nabla_X xi = -(f1 - f3) phi X.
Vector structure_derivative_xi(const AlmostContactStructure& acs,
                               const SpaceFormParams& params, const Vector& x);

/// (nabla_X eta)(Y) = g(nabla_X xi, Y).
double structure_derivative_eta(const AlmostContactStructure& acs,
                                const SpaceFormParams& params, const Vector& x,
                                const Vector& y);

/// (nabla_X D)(Y, Z) for the Levi-Civita connection nabla, expanded by the
/// product rule over eta, xi, phi and g.
Vector deformation_derivative(ConnectionKind kind,
                              const AlmostContactStructure& acs,
                              const SpaceFormParams& params, const Vector& x,
                              const Vector& y, const Vector& z);

/// Curvature of nabla + D computed from first principles:
///   R(X,Y)Z + (nabla_X D)(Y,Z) - (nabla_Y D)(X,Z)
///           + D(X, D(Y,Z)) - D(Y, D(X,Z)).
Vector curvature_oracle(ConnectionKind kind, const AlmostContactStructure& acs,
                        const SpaceFormParams& params, const Vector& x,
                        const Vector& y, const Vector& z);

/// One named summand of a closed-form curvature.
struct CurvatureTerm {
  std::string label;
  Vector value;
};

/// The closed-form curvature of `kind`, split into its typeset summands.
std::vector<CurvatureTerm> curvature_closed_terms(
    ConnectionKind kind, const AlmostContactStructure& acs,
    const SpaceFormParams& params, const Vector& x, const Vector& y,
    const Vector& z);

/// Sum of curvature_closed_terms().
Vector curvature_closed(ConnectionKind kind, const AlmostContactStructure& acs,
                        const SpaceFormParams& params, const Vector& x,
                        const Vector& y, const Vector& z);

struct TermContribution {
  std::string label;
  double norm = 0.0;            // |term|
  double along_residual = 0.0;  // g(term, r) / |r|
};

struct CurvatureWitness {
  int trial = 0;
  SpaceFormParams params;
  Vector x, y, z;
  Vector residual;  // closed - oracle
  std::vector<TermContribution> terms;
};

struct ComparisonReport {
  ConnectionKind kind = ConnectionKind::kLeviCivita;
  int trials = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool match = true;
  // First trial (in index order) whose residual exceeded tol.
  std::optional<CurvatureWitness> witness;
};

/// Draws (params, X, Y, Z) per trial, with X, Y, Z random unit vectors, and
/// compares the closed form against the oracle. Trial t uses
/// sampler.derive(t), so the report is independent of `threads`.
ComparisonReport compare_curvature(ConnectionKind kind,
                                   const AlmostContactStructure& acs,
                                   const Sampler& sampler, int trials,
                                   const ParamMode& params, double tol,
                                   int threads = 1);

}  // namespace gssf

#endif  // GSSF_CONNECTIONS_HPP_
