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

#ifndef GSSF_INVARIANTS_HPP_
#define GSSF_INVARIANTS_HPP_

#include <optional>
#include <string_view>
#include <variant>

#include "gssf/connections.hpp"
#include "gssf/contact_geometry.hpp"
#include "gssf/sampler.hpp"
#include "gssf/submanifolds.hpp"

namespace gssf {

/// Which closed form to evaluate: the typeset formula verbatim, or the
/// re-derived formula that agrees with the frame contraction.
enum class FormVariant { kAsPrinted, kOracleDerived };
std::string_view to_string(FormVariant v);

/// S(X,Y) = sum_i R(E_i, X, Y, E_i) (kFirstLast, the default) or
/// sum_i R(X, E_i, E_i, Y) (kLastFirst). The two agree for metric
/// connections; they differ for the semisymmetric non-metric one.
enum class RicciConvention { kFirstLast, kLastFirst };
std::string_view to_string(RicciConvention c);

struct GeneralForm {};
struct AsiForm {};
/// Sasakian specialization; the params passed alongside must equal
/// sasakian_params(c).
struct SasakianForm {
  double c = 1.0;
};
using RicciForm = std::variant<GeneralForm, AsiForm, SasakianForm>;

/// Ricci tensor by direct contraction of induced_curvature over the frame.
double ricci_direct(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y,
                    RicciConvention convention = RicciConvention::kFirstLast);

/// Closed-form Ricci tensor. Asi and Sasakian forms need `split`.
/// The Levi-Civita connection has no printed form; both variants evaluate
/// the derived one. Closed forms follow the kFirstLast convention.
double ricci_closed(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y, const RicciForm& form, FormVariant variant,
                    const DistributionSplit* split = nullptr);

/// (1 / (m(m+1))) sum_ij R(E_i, E_j, E_j, E_i). Requires m >= 1.
double scalar_direct(const Submanifold& sub, ConnectionKind kind,
                     const SpaceFormParams& params);

double scalar_closed(const Submanifold& sub, ConnectionKind kind,
                     const SpaceFormParams& params,
                     const DistributionSplit& split, FormVariant variant);

/// Pieces of the closed forms that involve the deformed second fundamental
/// form, in frame coordinates (M_k = h~_k(E_i, E_j), row = first argument).
struct ShapeTerms {
  double trace_term = 0.0;      // sum_k tr(M_k) a^T M_k b
  double quadratic_adj = 0.0;   // sum_k g(A_k X, A_k Y) = a^T M_k M_k^T b
  double quadratic_sq = 0.0;    // sum_k g(A_k^2 X, Y) = a^T M_k^2 b
};
ShapeTerms shape_terms(const Submanifold& sub, ConnectionKind kind,
                       const SpaceFormParams& params, const Vector& x,
                       const Vector& y);

struct ScalarShapeTerms {
  double mean_sq = 0.0;    // (m+1)^2 |H~|^2 = sum_k tr(M_k)^2
  double frobenius = 0.0;  // |h~|^2 = sum_k tr(M_k M_k^T)
  double twisted = 0.0;    // sum_k tr(M_k^2)
};
ScalarShapeTerms scalar_shape_terms(const Submanifold& sub, ConnectionKind kind,
                                    const SpaceFormParams& params);

/// Right side of inequality (i) at X (the h-free asi form at Y = X).
double theorem_ricci_bound(const Submanifold& sub, ConnectionKind kind,
                           const SpaceFormParams& params,
                           const DistributionSplit& split, const Vector& x,
                           FormVariant variant);

/// Right side of inequality (ii).
double theorem_scalar_bound(const Submanifold& sub, ConnectionKind kind,
                            const SpaceFormParams& params,
                            const DistributionSplit& split, FormVariant variant);

struct TheoremReport {
  ConnectionKind kind = ConnectionKind::kLeviCivita;
  int trials = 0;
  double tol = 0.0;

  // Inequality (i): slack = RHS(X) - S(X,X), minimum over sampled X.
  double min_slack_printed = 0.0;
  double min_slack_derived = 0.0;
  Vector worst_x_printed;
  Vector worst_x_derived;
  // |slack_derived - sum_k g(A_k X, A_k X)|, the printed residual identity.
  double max_adjoint_slack_residual = 0.0;
  // |slack_derived - sum_k g(A_k^2 X, X)|, the identity the contraction forces.
  double max_square_slack_residual = 0.0;
  // |sum_k tr(A_k) g(A_k X, X)|.
  double max_minimality_residual = 0.0;

  // Inequality (ii): slack = bound - tau.
  double scalar_slack_printed = 0.0;
  double scalar_slack_derived = 0.0;

  bool ricci_holds(FormVariant v) const;
  bool scalar_holds(FormVariant v) const;
  bool adjoint_slack_matches() const { return max_adjoint_slack_residual <= tol; }
  bool square_slack_matches() const { return max_square_slack_residual <= tol; }
  bool minimality_holds() const { return max_minimality_residual <= tol; }
};

/// Evaluates both theorem inequalities on `trials` random tangent X.
/// Throws "theorem hypothesis violated" unless the submanifold is minimal
/// for `kind` (to 1e-8).
TheoremReport theorem_inequalities(const Submanifold& sub, ConnectionKind kind,
                                   const SpaceFormParams& params,
                                   const DistributionSplit& split,
                                   Sampler& sampler, int trials, double tol);

struct EqualityReport {
  ConnectionKind kind = ConnectionKind::kLeviCivita;
  int samples = 0;
  double tol = 0.0;
  double max_ricci_gap_derived = 0.0;
  double scalar_gap_derived = 0.0;
  double max_ricci_gap_printed = 0.0;  // recorded, not asserted
  double scalar_gap_printed = 0.0;     // recorded, not asserted
  bool pass = false;
};

/// Equality in (i) and (ii) against the derived right sides, at every frame
/// vector and 20 random tangent X. Throws unless the submanifold is totally
/// geodesic for `kind` (to 1e-8).
EqualityReport equality_check(const Submanifold& sub, ConnectionKind kind,
                              const SpaceFormParams& params,
                              const DistributionSplit& split, Sampler& sampler,
                              double tol);

}  // namespace gssf

#endif  // GSSF_INVARIANTS_HPP_
