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

#include "gssf/frame_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gssf {

Metric::Metric(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw Error("metric must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error("metric is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_,
                                                        Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw Error("metric is not positive definite");
  }
  is_identity_ = entries_.isIdentity(0.0);
}

Metric Metric::identity(Eigen::Index dim) {
  return Metric(Eigen::MatrixXd::Identity(dim, dim));
}

double Metric::inner(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw Error("vector dimension does not match metric");
  }
  if (is_identity_) return x.dot(y);
  return x.dot(entries_ * y);
}

double Metric::norm(const Vector& x) const {
  return std::sqrt(std::max(0.0, norm_squared(x)));
}

std::vector<Vector> orthonormalize(std::span<const Vector> vectors,
                                   const Metric& g, double tol) {
  if (vectors.empty()) throw Error("empty span");
  const Eigen::Index d = vectors.front().size();
  std::vector<Vector> out;
  for (const Vector& v : vectors) {
    if (v.size() != d || d != g.dim()) throw Error("vectors of unequal length");
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : out) w -= g.inner(w, b) * b;
    }
    const double norm = g.norm(w);
    if (norm < tol) continue;
    out.push_back(w / norm);
  }
  return out;
}

double orthonormality_defect(std::span<const Vector> basis, const Metric& g) {
  double defect = 0.0;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i; j < basis.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(g.inner(basis[i], basis[j]) - target));
    }
  }
  return defect;
}

Vector project(const Vector& v, std::span<const Vector> basis, const Metric& g) {
  const double defect = orthonormality_defect(basis, g);
  if (defect > 1e-8) {
    std::ostringstream msg;
    msg << "projection basis is not orthonormal (defect " << defect << ")";
    throw Error(msg.str());
  }
  return detail::project_unchecked(v, basis, g);
}

namespace detail {

Vector project_unchecked(const Vector& v, std::span<const Vector> basis,
                         const Metric& g) {
  Vector out = Vector::Zero(v.size());
  for (const Vector& b : basis) out += g.inner(v, b) * b;
  return out;
}

}  // namespace detail

std::vector<EigenCluster> symmetric_spectrum(const Operator& a,
                                             std::span<const Vector> basis,
                                             const Metric& g, double tol) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  if (k == 0) return {};
  if (a.rows() != g.dim() || a.cols() != g.dim()) {
    throw Error("operator dimension does not match metric");
  }

  // Matrix of the restriction in the orthonormal basis: M_ij = g(b_i, A b_j).
  Eigen::MatrixXd m(k, k);
  std::vector<Vector> images;
  images.reserve(basis.size());
  for (Eigen::Index j = 0; j < k; ++j) images.push_back(a * basis[j]);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = g.inner(basis[i], images[j]);
  }

  double invariance = 0.0;
  for (Eigen::Index j = 0; j < k; ++j) {
    Vector inside = Vector::Zero(a.rows());
    for (Eigen::Index i = 0; i < k; ++i) inside += m(i, j) * basis[i];
    invariance = std::max(invariance, g.norm(images[j] - inside));
  }
  if (invariance > tol) {
    std::ostringstream msg;
    msg << "operator does not leave the subspace invariant (residual "
        << invariance << ")";
    throw Error(msg.str());
  }
  const double asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > tol) {
    std::ostringstream msg;
    msg << "restriction is not self-adjoint (residual " << asymmetry << ")";
    throw Error(msg.str());
  }

  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  // Eigen returns ascending eigenvalues; walk them in reverse.
  std::vector<EigenCluster> clusters;
  double cluster_sum = 0.0;
  double previous = 0.0;
  for (Eigen::Index idx = k - 1; idx >= 0; --idx) {
    const double lambda = solver.eigenvalues()(idx);
    Vector v = Vector::Zero(a.rows());
    for (Eigen::Index i = 0; i < k; ++i) v += solver.eigenvectors()(i, idx) * basis[i];
    if (clusters.empty() || previous - lambda > tol) {
      if (!clusters.empty()) {
        auto& last = clusters.back();
        last.eigenvalue = cluster_sum / static_cast<double>(last.eigenvectors.size());
      }
      clusters.push_back({lambda, {}});
      cluster_sum = 0.0;
    }
    clusters.back().eigenvectors.push_back(std::move(v));
    cluster_sum += lambda;
    previous = lambda;
  }
  auto& last = clusters.back();
  last.eigenvalue = cluster_sum / static_cast<double>(last.eigenvectors.size());
  return clusters;
}

Vector basis_vector(Eigen::Index dim, Eigen::Index i) {
  if (i < 0 || i >= dim) throw Error("basis index out of range");
  Vector e = Vector::Zero(dim);
  e(i) = 1.0;
  return e;
}

}  // namespace gssf
