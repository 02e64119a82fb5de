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

#ifndef GSSF_CONTACT_GEOMETRY_HPP_
#define GSSF_CONTACT_GEOMETRY_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gssf/frame_algebra.hpp"
#include "gssf/sampler.hpp"

namespace gssf {

/// Almost contact metric structure (phi, xi, eta, g) at a single point.
///
/// eta is not stored: eta(X) = g(X, xi) by construction. The constructor only
/// checks shapes; use validate() to check the structure identities.
class AlmostContactStructure {
 public:
  AlmostContactStructure(int n, Operator phi, Vector xi, Metric g);

  int n() const { return n_; }
  Eigen::Index dim() const { return xi_.size(); }
  const Operator& phi() const { return phi_; }
  const Vector& xi() const { return xi_; }
  const Metric& metric() const { return g_; }

  double g(const Vector& x, const Vector& y) const { return g_.inner(x, y); }
  double eta(const Vector& x) const { return g_.inner(x, xi_); }
  Vector apply_phi(const Vector& x) const { return phi_ * x; }
  /// eta as a covector in the standard dual frame (components G xi).
  Vector eta_covector() const { return g_.entries() * xi_; }

  void require_dim(const Vector& x) const;

 private:
  int n_;
  Operator phi_;
  Vector xi_;
  Metric g_;
};

/// The pointwise values of f1, f2, f3.
struct SpaceFormParams {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;

  /// f1 - f3, the coefficient of the structure derivatives.
  double psi() const { return f1 - f3; }
  bool operator==(const SpaceFormParams&) const = default;
};

/// Sasakian-space-form specialization: ((c+3)/4, (c-1)/4, (c-1)/4).
SpaceFormParams sasakian_params(double c);

/// Standard model on R^{2n+1}: g = I, xi = e_{2n+1}, phi e_i = e_{n+i},
/// phi e_{n+i} = -e_i. Requires n >= 1.
AlmostContactStructure canonical_structure(int n);

struct IdentityResidual {
  std::string identity;  // short label of the checked identity
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<IdentityResidual> residuals;
  double tol = 0.0;
  bool pass = false;

  double max_residual() const;
};

/// Checks phi^2 = -I + eta (x) xi, phi xi = 0, eta(xi) = 1, eta o phi = 0,
/// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y) and skewness of phi, on all
/// pairs of standard frame vectors.
ValidationReport validate(const AlmostContactStructure& acs, double tol);

/// Curvature of a generalized Sasakian-space-form, R(X, Y) Z.
Vector gssf_curvature(const AlmostContactStructure& acs,
                      const SpaceFormParams& params, const Vector& x,
                      const Vector& y, const Vector& z);

struct TangentNormalParts {
  Vector tangential;  // T X
  Vector normal;      // F X
};

/// Splits phi X into its parts tangent and normal to span(tangent_basis).
/// X must lie in the span (residual <= 1e-8); the basis must be orthonormal.
TangentNormalParts tf_split(const AlmostContactStructure& acs,
                            std::span<const Vector> tangent_basis,
                            const Vector& x);

// How f1, f2, f3 are chosen for randomized checks.
struct FixedParams {
  SpaceFormParams params;
};
struct SasakianParams {
  double c = 1.0;
};
struct RandomParams {
  double lo = -2.0;
  double hi = 2.0;
};
using ParamMode = std::variant<FixedParams, SasakianParams, RandomParams>;

SpaceFormParams draw_params(const ParamMode& mode, Sampler& sampler);

}  // namespace gssf

#endif  // GSSF_CONTACT_GEOMETRY_HPP_
