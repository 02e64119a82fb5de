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

#include "gssf/contact_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gssf {

AlmostContactStructure::AlmostContactStructure(int n, Operator phi, Vector xi,
                                               Metric g)
    : n_(n), phi_(std::move(phi)), xi_(std::move(xi)), g_(std::move(g)) {
  if (n_ < 1) throw Error("almost contact structure requires n >= 1");
  const Eigen::Index d = 2 * n_ + 1;
  if (xi_.size() != d || phi_.rows() != d || phi_.cols() != d || g_.dim() != d) {
    std::ostringstream msg;
    msg << "almost contact structure components must have dimension " << d;
    throw Error(msg.str());
  }
}

void AlmostContactStructure::require_dim(const Vector& x) const {
  if (x.size() != dim()) {
    std::ostringstream msg;
    msg << "dimension mismatch: expected " << dim() << ", got " << x.size();
    throw Error(msg.str());
  }
}

SpaceFormParams sasakian_params(double c) {
  return {(c + 3.0) / 4.0, (c - 1.0) / 4.0, (c - 1.0) / 4.0};
}

AlmostContactStructure canonical_structure(int n) {
  if (n < 1) throw Error("canonical_structure requires n >= 1");
  const Eigen::Index d = 2 * n + 1;
  Operator phi = Operator::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    phi(n + i, i) = 1.0;   // phi e_i = e_{n+i}
    phi(i, n + i) = -1.0;  // phi e_{n+i} = -e_i
  }
  return AlmostContactStructure(n, std::move(phi), basis_vector(d, d - 1),
                                Metric::identity(d));
}

double ValidationReport::max_residual() const {
  double out = 0.0;
  for (const auto& r : residuals) out = std::max(out, r.residual);
  return out;
}

ValidationReport validate(const AlmostContactStructure& acs, double tol) {
  const Eigen::Index d = acs.dim();
  const Vector& xi = acs.xi();
  std::vector<Vector> frame;
  for (Eigen::Index i = 0; i < d; ++i) frame.push_back(basis_vector(d, i));

  double phi_squared = acs.metric().norm(acs.apply_phi(xi));  // phi xi = 0
  double eta_xi = std::abs(acs.eta(xi) - 1.0);
  double eta_phi = 0.0;
  double phi_metric = 0.0;
  double phi_skew = 0.0;
  for (const Vector& x : frame) {
    const Vector phi_x = acs.apply_phi(x);
    const Vector lhs = acs.apply_phi(phi_x);
    const Vector rhs = -x + acs.eta(x) * xi;
    phi_squared = std::max(phi_squared, acs.metric().norm(lhs - rhs));
    eta_phi = std::max(eta_phi, std::abs(acs.eta(phi_x)));
    for (const Vector& y : frame) {
      const Vector phi_y = acs.apply_phi(y);
      phi_metric = std::max(
          phi_metric, std::abs(acs.g(phi_x, phi_y) -
                               (acs.g(x, y) - acs.eta(x) * acs.eta(y))));
      phi_skew = std::max(phi_skew, std::abs(acs.g(phi_x, y) + acs.g(x, phi_y)));
    }
  }

  ValidationReport report;
  report.tol = tol;
  report.residuals = {
      {"phi^2 = -I + eta(.)xi, phi xi = 0", phi_squared},
      {"eta(xi) = 1, eta(phi X) = 0", std::max(eta_xi, eta_phi)},
      {"g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)", phi_metric},
      {"g(phi X, Y) = -g(X, phi Y)", phi_skew},
  };
  report.pass = report.max_residual() <= tol;
  return report;
}

Vector gssf_curvature(const AlmostContactStructure& acs,
                      const SpaceFormParams& params, const Vector& x,
                      const Vector& y, const Vector& z) {
  acs.require_dim(x);
  acs.require_dim(y);
  acs.require_dim(z);
  const Vector& xi = acs.xi();
  const Vector phi_x = acs.apply_phi(x);
  const Vector phi_y = acs.apply_phi(y);
  const Vector phi_z = acs.apply_phi(z);
  const double gxz = acs.g(x, z);
  const double gyz = acs.g(y, z);
  const double ex = acs.eta(x);
  const double ey = acs.eta(y);
  const double ez = acs.eta(z);

  const Vector f1_block = gyz * x - gxz * y;
  const Vector f2_block = acs.g(x, phi_z) * phi_y - acs.g(y, phi_z) * phi_x +
                          2.0 * acs.g(x, phi_y) * phi_z;
  const Vector f3_block = ex * ez * y - ey * ez * x + gxz * ey * xi - gyz * ex * xi;
  return params.f1 * f1_block + params.f2 * f2_block + params.f3 * f3_block;
}

TangentNormalParts tf_split(const AlmostContactStructure& acs,
                            std::span<const Vector> tangent_basis,
                            const Vector& x) {
  acs.require_dim(x);
  const Vector inside = project(x, tangent_basis, acs.metric());
  const double off = acs.metric().norm(x - inside);
  if (off > 1e-8) {
    std::ostringstream msg;
    msg << "vector is not in the tangent span (residual " << off << ")";
    throw Error(msg.str());
  }
  const Vector phi_x = acs.apply_phi(x);
  Vector t = detail::project_unchecked(phi_x, tangent_basis, acs.metric());
  Vector f = phi_x - t;
  return {std::move(t), std::move(f)};
}

SpaceFormParams draw_params(const ParamMode& mode, Sampler& sampler) {
  struct Visitor {
    Sampler& s;
    SpaceFormParams operator()(const FixedParams& p) const { return p.params; }
    SpaceFormParams operator()(const SasakianParams& p) const {
      return sasakian_params(p.c);
    }
    SpaceFormParams operator()(const RandomParams& p) const {
      const double f1 = s.scalar(p.lo, p.hi);
      const double f2 = s.scalar(p.lo, p.hi);
      const double f3 = s.scalar(p.lo, p.hi);
      return {f1, f2, f3};
    }
  };
  return std::visit(Visitor{sampler}, mode);
}

}  // namespace gssf
