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

#ifndef GSSF_SUBMANIFOLDS_HPP_
#define GSSF_SUBMANIFOLDS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gssf/connections.hpp"
#include "gssf/contact_geometry.hpp"
#include "gssf/frame_algebra.hpp"
#include "gssf/sampler.hpp"

namespace gssf {

/// Second fundamental form coefficients: block k is the (m+1) x (m+1) matrix
/// h_k(E_i, E_j) = g(h(E_i, E_j), F_k) in the tangent frame.
using SffCoefficients = std::vector<Eigen::MatrixXd>;

/// A ξ-tangent submanifold at one point: tangent frame E_1..E_m, E_{m+1} = ξ,
/// normal frame F_1..F_{2n-m}, and the Levi-Civita second fundamental form.
class Submanifold {
 public:
  /// The tangent frame is the orthonormalized span with ξ split off and
  /// appended last; the normal frame completes it using the standard basis.
  /// Throws "xi not tangent" if ξ is not in the span (to 1e-8), and on
  /// coefficient blocks of the wrong shape or that are not symmetric.
  static Submanifold build(const AlmostContactStructure& acs,
                           std::span<const Vector> spanning,
                           std::optional<SffCoefficients> sff = std::nullopt);

  /// Same frames, different second fundamental form (validated as in build).
  Submanifold with_sff(SffCoefficients sff) const;

  const AlmostContactStructure& structure() const { return acs_; }
  /// Number of frame vectors orthogonal to ξ; the tangent dimension is m + 1.
  int m() const { return static_cast<int>(tangent_.size()) - 1; }
  int codim() const { return static_cast<int>(normal_.size()); }
  const std::vector<Vector>& tangent_frame() const { return tangent_; }
  const std::vector<Vector>& normal_frame() const { return normal_; }
  /// The frame vectors E_1..E_m spanning the distribution orthogonal to ξ.
  std::span<const Vector> distribution_frame() const {
    return std::span<const Vector>(tangent_).first(tangent_.size() - 1);
  }
  const SffCoefficients& sff() const { return sff_; }

  /// Coordinates g(X, E_i); throws if X is not tangent (residual > 1e-8).
  Eigen::VectorXd tangent_coords(const Vector& x) const;
  bool is_tangent(const Vector& x, double tol = 1e-8) const;
  /// Ambient vector with the given normal-frame coordinates.
  Vector from_normal_coords(const Eigen::VectorXd& coords) const;
  /// Normal-frame coordinates g(V, F_k).
  Eigen::VectorXd normal_coords(const Vector& v) const;

  /// h(X, Y) for the Levi-Civita connection.
  Vector sff_value(const Vector& x, const Vector& y) const;

  /// T X (tangential part of phi X).
  Vector t_part(const Vector& x) const;
  /// F X (normal part of phi X).
  Vector f_part(const Vector& x) const;

 private:
  Submanifold(AlmostContactStructure acs, std::vector<Vector> tangent,
              std::vector<Vector> normal, SffCoefficients sff);

  static void check_sff(const SffCoefficients& sff, Eigen::Index size,
                        Eigen::Index count);

  AlmostContactStructure acs_;
  std::vector<Vector> tangent_;
  std::vector<Vector> normal_;
  SffCoefficients sff_;
};

/// Shape operator A_k on the ambient space: g(A_k X, Y) = h_k(X, Y) for
/// tangent X, Y; zero on the normal bundle. `k` is zero-based.
Operator shape_operator(const Submanifold& sub, int k);

/// Deformed second fundamental form h(X,Y) + (D(X,Y))^normal. Not symmetric
/// in general for the Schouten-van Kampen and Tanaka-Webster connections.
Vector deformed_sff(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y);

/// Coefficient blocks of the deformed second fundamental form: block k holds
/// g(h~(E_i, E_j), F_k). Row index is the first argument.
SffCoefficients deformed_sff_blocks(const Submanifold& sub, ConnectionKind kind,
                                    const SpaceFormParams& params);

/// H = (1 / (m+1)) sum_i h~(E_i, E_i).
Vector mean_curvature(const Submanifold& sub, ConnectionKind kind,
                      const SpaceFormParams& params);

enum class SffClass { kTotallyGeodesic, kMinimal, kGeneric };
std::string_view to_string(SffClass c);

SffClass classify_sff(const Submanifold& sub, ConnectionKind kind,
                      const SpaceFormParams& params, double tol);

/// R(X,Y,Z,W) of the induced connection from the Gauss equation:
///   Rbar(X,Y,Z,W) + g(h~(X,W), h~(Y,Z)) - g(h~(X,Z), h~(Y,W)),
/// with Rbar the closed-form ambient curvature for `kind`.
double induced_curvature(const Submanifold& sub, ConnectionKind kind,
                         const SpaceFormParams& params, const Vector& x,
                         const Vector& y, const Vector& z, const Vector& w);

enum class DistributionType { kInvariant, kAntiInvariant, kSlant };
std::string_view to_string(DistributionType type);

struct DistributionCluster {
  double lambda = 0.0;  // in [0, 1]
  int multiplicity = 0;
  std::vector<Vector> basis;  // g-orthonormal eigenvectors of T^2
  DistributionType type = DistributionType::kSlant;
};

/// Eigen-decomposition of the distribution orthogonal to ξ under -T^2.
struct DistributionSplit {
  std::vector<DistributionCluster> clusters;  // descending lambda

  /// U^lambda X for cluster `index`.
  Vector project(size_t index, const Vector& x, const Metric& g) const;
  /// sum_lambda n(lambda) lambda^2.
  double weighted_lambda_squares() const;
  int total_multiplicity() const;
};

/// Spectrum of -T^2 on E_1..E_m with clustering tolerance `tol`; lambda is the
/// square root of the eigenvalue clamped to [0, 1]. A cluster is invariant or
/// anti-invariant when its eigenvalue is within `tol` of 1 or 0.
DistributionSplit asi_split(const Submanifold& sub, double tol = kDefaultDropTol);

struct SlantIdentityReport {
  int trials = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = true;
};

/// |g(TX, TY) - sum_lambda lambda^2 g(U X, U Y)| over random tangent X, Y.
SlantIdentityReport verify_slant_identity(const Submanifold& sub,
                                          const DistributionSplit& split,
                                          Sampler& sampler, int trials,
                                          double tol);

/// Random symmetric coefficients with every block traceless; the result is
/// minimal for all five connections.
SffCoefficients random_minimal_sff(const Submanifold& sub, Sampler& sampler);

/// Random symmetric coefficients without the trace condition.
SffCoefficients random_sff(const Submanifold& sub, Sampler& sampler);

/// m random unit vectors orthogonal to ξ plus ξ itself, retrying on rank
/// deficiency. Requires 1 <= m <= 2n - 1.
Submanifold random_submanifold(const AlmostContactStructure& acs, int m,
                               Sampler& sampler);

/// Uniformly random unit tangent vector (in frame coordinates).
Vector random_tangent(const Submanifold& sub, Sampler& sampler);

}  // namespace gssf

#endif  // GSSF_SUBMANIFOLDS_HPP_
