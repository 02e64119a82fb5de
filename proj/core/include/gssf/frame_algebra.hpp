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

#ifndef GSSF_FRAME_ALGEBRA_HPP_
#define GSSF_FRAME_ALGEBRA_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gssf {

// Coordinates are always taken in the ambient standard frame.
using Vector = Eigen::VectorXd;
// A (1,1) tensor acting on column vectors.
using Operator = Eigen::MatrixXd;

/// Raised for precondition violations anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultDropTol = 1e-8;
inline constexpr double kDefaultCompareTol = 1e-9;

/// A positive-definite symmetric bilinear form on R^d.
///
/// The constructor rejects asymmetric (beyond 1e-12 relative) or
/// non-positive-definite input.
class Metric {
 public:
  explicit Metric(Eigen::MatrixXd entries);

  static Metric identity(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }

  double inner(const Vector& x, const Vector& y) const;
  double norm_squared(const Vector& x) const { return inner(x, x); }
  double norm(const Vector& x) const;

 private:
  Eigen::MatrixXd entries_;
  bool is_identity_ = false;
};

/// Gram-Schmidt with respect to `g`, run twice per vector for stability.
///
/// Vectors whose g-norm after projection falls below `tol` are dropped; the
/// survivors keep their order of first appearance. Throws "empty span" on
/// empty input and on vectors of mismatched length.
std::vector<Vector> orthonormalize(std::span<const Vector> vectors,
                                   const Metric& g,
                                   double tol = kDefaultDropTol);

/// Orthogonal projection onto span(basis). The basis must be g-orthonormal
/// to 1e-8, otherwise throws.
Vector project(const Vector& v, std::span<const Vector> basis, const Metric& g);

/// Largest |g(b_i, b_j) - delta_ij| over the basis.
double orthonormality_defect(std::span<const Vector> basis, const Metric& g);

struct EigenCluster {
  double eigenvalue = 0.0;
  std::vector<Vector> eigenvectors;  // g-orthonormal
};

/// Spectrum of `a` restricted to span(basis).
///
/// The restriction must map the span into itself and be g-self-adjoint, both
/// to `tol`; otherwise throws with the offending residual. Eigenvalues within
/// `tol` of their neighbour are merged into one cluster (absolute gap) and
/// clusters come back sorted by descending eigenvalue.
std::vector<EigenCluster> symmetric_spectrum(const Operator& a,
                                             std::span<const Vector> basis,
                                             const Metric& g,
                                             double tol = kDefaultDropTol);

/// i-th standard basis vector of R^dim (zero-based).
Vector basis_vector(Eigen::Index dim, Eigen::Index i);

namespace detail {

// Projection without the orthonormality check; for hot loops over frames
// that were produced by orthonormalize().
Vector project_unchecked(const Vector& v, std::span<const Vector> basis,
                         const Metric& g);

}  // namespace detail

}  // namespace gssf

#endif  // GSSF_FRAME_ALGEBRA_HPP_
