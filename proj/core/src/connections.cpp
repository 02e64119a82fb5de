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

#include "gssf/connections.hpp"

#include <algorithm>
#include <cmath>

namespace gssf {

std::string_view to_string(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::kLeviCivita: return "levi_civita";
    case ConnectionKind::kSemisymmetricMetric: return "semisymmetric_metric";
    case ConnectionKind::kSemisymmetricNonMetric: return "semisymmetric_non_metric";
    case ConnectionKind::kSchoutenVanKampen: return "schouten_van_kampen";
    case ConnectionKind::kTanakaWebster: return "tanaka_webster";
  }
  return "unknown";
}

std::optional<ConnectionKind> parse_connection_kind(std::string_view name) {
  for (ConnectionKind kind : kAllConnections) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

Vector deformation(ConnectionKind kind, const AlmostContactStructure& acs,
                   const SpaceFormParams& params, const Vector& x,
                   const Vector& y) {
  acs.require_dim(x);
  acs.require_dim(y);
  const double psi = params.psi();
  const Vector& xi = acs.xi();
  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return Vector::Zero(acs.dim());
    case ConnectionKind::kSemisymmetricMetric:
      return acs.eta(y) * x - acs.g(x, y) * xi;
    case ConnectionKind::kSemisymmetricNonMetric:
      return acs.eta(y) * x;
    case ConnectionKind::kSchoutenVanKampen: {
      const Vector phi_x = acs.apply_phi(x);
      return psi * acs.eta(y) * phi_x - psi * acs.g(phi_x, y) * xi;
    }
    case ConnectionKind::kTanakaWebster: {
      const Vector phi_x = acs.apply_phi(x);
      return acs.eta(x) * acs.apply_phi(y) + psi * acs.eta(y) * phi_x -
             psi * acs.g(phi_x, y) * xi;
    }
  }
  throw Error("unknown connection kind");
}

Vector structure_derivative_phi(const AlmostContactStructure& acs,
                                const SpaceFormParams& params, const Vector& x,
                                const Vector& y) {
  return params.psi() * (acs.g(x, y) * acs.xi() - acs.eta(y) * x);
}

Vector structure_derivative_xi(const AlmostContactStructure& acs,
                               const SpaceFormParams& params, const Vector& x) {
  return -params.psi() * acs.apply_phi(x);
}

double structure_derivative_eta(const AlmostContactStructure& acs,
                                const SpaceFormParams& params, const Vector& x,
                                const Vector& y) {
  return acs.g(structure_derivative_xi(acs, params, x), y);
}

Vector deformation_derivative(ConnectionKind kind,
                              const AlmostContactStructure& acs,
                              const SpaceFormParams& params, const Vector& x,
                              const Vector& y, const Vector& z) {
  acs.require_dim(x);
  acs.require_dim(y);
  acs.require_dim(z);
  const double psi = params.psi();
  const Vector& xi = acs.xi();
  const Vector dxi = structure_derivative_xi(acs, params, x);
  const double deta_z = structure_derivative_eta(acs, params, x, z);

  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return Vector::Zero(acs.dim());
    case ConnectionKind::kSemisymmetricMetric:
      // D(Y,Z) = eta(Z) Y - g(Y,Z) xi
      return deta_z * y - acs.g(y, z) * dxi;
    case ConnectionKind::kSemisymmetricNonMetric:
      // D(Y,Z) = eta(Z) Y
      return deta_z * y;
    case ConnectionKind::kSchoutenVanKampen:
    case ConnectionKind::kTanakaWebster: {
      // psi [eta(Z) phi Y - g(phi Y, Z) xi], psi constant.
      const Vector phi_y = acs.apply_phi(y);
      const Vector dphi_y = structure_derivative_phi(acs, params, x, y);
      Vector out = psi * (deta_z * phi_y + acs.eta(z) * dphi_y -
                          acs.g(dphi_y, z) * xi - acs.g(phi_y, z) * dxi);
      if (kind == ConnectionKind::kTanakaWebster) {
        // + eta(Y) phi Z
        const double deta_y = structure_derivative_eta(acs, params, x, y);
        out += deta_y * acs.apply_phi(z) +
               acs.eta(y) * structure_derivative_phi(acs, params, x, z);
      }
      return out;
    }
  }
  throw Error("unknown connection kind");
}

Vector curvature_oracle(ConnectionKind kind, const AlmostContactStructure& acs,
                        const SpaceFormParams& params, const Vector& x,
                        const Vector& y, const Vector& z) {
  Vector out = gssf_curvature(acs, params, x, y, z);
  if (kind == ConnectionKind::kLeviCivita) return out;
  out += deformation_derivative(kind, acs, params, x, y, z) -
         deformation_derivative(kind, acs, params, y, x, z);
  out += deformation(kind, acs, params, x, deformation(kind, acs, params, y, z)) -
         deformation(kind, acs, params, y, deformation(kind, acs, params, x, z));
  return out;
}

std::vector<CurvatureTerm> curvature_closed_terms(
    ConnectionKind kind, const AlmostContactStructure& acs,
    const SpaceFormParams& params, const Vector& x, const Vector& y,
    const Vector& z) {
  acs.require_dim(x);
  acs.require_dim(y);
  acs.require_dim(z);
  const auto [f1, f2, f3] = params;
  const double psi = params.psi();
  const Vector& xi = acs.xi();
  const Vector phi_x = acs.apply_phi(x);
  const Vector phi_y = acs.apply_phi(y);
  const Vector phi_z = acs.apply_phi(z);
  const double gxz = acs.g(x, z);
  const double gyz = acs.g(y, z);
  const double g_x_phiz = acs.g(x, phi_z);
  const double g_y_phiz = acs.g(y, phi_z);
  const double g_x_phiy = acs.g(x, phi_y);
  const double ex = acs.eta(x);
  const double ey = acs.eta(y);
  const double ez = acs.eta(z);

  const Vector a_block = gyz * x - gxz * y;
  const Vector b_block = g_x_phiz * phi_y - g_y_phiz * phi_x + 2.0 * g_x_phiy * phi_z;
  const Vector c_block = ex * ez * y - ey * ez * x + gxz * ey * xi - gyz * ex * xi;

  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return {
          {"f1{g(Y,Z)X-g(X,Z)Y}", f1 * a_block},
          {"f2{g(X,phiZ)phiY-g(Y,phiZ)phiX+2g(X,phiY)phiZ}", f2 * b_block},
          {"f3{eta(X)eta(Z)Y-eta(Y)eta(Z)X+g(X,Z)eta(Y)xi-g(Y,Z)eta(X)xi}",
           f3 * c_block},
      };
    case ConnectionKind::kSemisymmetricMetric:
      return {
          {"(f1-1){g(Y,Z)X-g(X,Z)Y}", (f1 - 1.0) * a_block},
          {"f2{g(X,phiZ)phiY-g(Y,phiZ)phiX+2g(X,phiY)phiZ}", f2 * b_block},
          {"(f3-1){eta(X)eta(Z)Y-eta(Y)eta(Z)X+g(X,Z)eta(Y)xi-g(Y,Z)eta(X)xi}",
           (f3 - 1.0) * c_block},
          {"(f1-f3){g(X,phiZ)Y-g(Y,phiZ)X+g(Y,Z)phiX-g(X,Z)phiY}",
           psi * (g_x_phiz * y - g_y_phiz * x + gyz * phi_x - gxz * phi_y)},
      };
    case ConnectionKind::kSemisymmetricNonMetric:
      return {
          {"f1{g(Y,Z)X-g(X,Z)Y}", f1 * a_block},
          {"f2{g(X,phiZ)phiY-g(Y,phiZ)phiX+2g(X,phiY)phiZ}", f2 * b_block},
          {"f3{eta(X)eta(Z)Y-eta(Y)eta(Z)X+g(X,Z)eta(Y)xi-g(Y,Z)eta(X)xi}",
           f3 * c_block},
          {"(f1-f3)[g(X,phiZ)Y-g(Y,phiZ)X]", psi * (g_x_phiz * y - g_y_phiz * x)},
          {"eta(Y)eta(Z)X-eta(X)eta(Z)Y", ey * ez * x - ex * ez * y},
      };
    case ConnectionKind::kSchoutenVanKampen:
    case ConnectionKind::kTanakaWebster: {
      std::vector<CurvatureTerm> terms = {
          {"f1{g(Y,Z)X-g(X,Z)Y}", f1 * a_block},
          {"f2{g(X,phiZ)phiY-g(Y,phiZ)phiX+2g(X,phiY)phiZ}", f2 * b_block},
          {"{f3+(f1-f3)^2}{eta(X)eta(Z)Y-eta(Y)eta(Z)X+g(X,Z)eta(Y)xi-g(Y,Z)eta(X)xi}",
           (f3 + psi * psi) * c_block},
          {"(f1-f3)^2{g(X,phiZ)phiY-g(Y,phiZ)phiX}",
           psi * psi * (g_x_phiz * phi_y - g_y_phiz * phi_x)},
      };
      if (kind == ConnectionKind::kTanakaWebster) {
        terms.push_back({"2(f1-f3)g(X,phiY)phiZ", 2.0 * psi * g_x_phiy * phi_z});
      }
      return terms;
    }
  }
  throw Error("unknown connection kind");
}

Vector curvature_closed(ConnectionKind kind, const AlmostContactStructure& acs,
                        const SpaceFormParams& params, const Vector& x,
                        const Vector& y, const Vector& z) {
  Vector out = Vector::Zero(acs.dim());
  for (const auto& term : curvature_closed_terms(kind, acs, params, x, y, z)) {
    out += term.value;
  }
  return out;
}

ComparisonReport compare_curvature(ConnectionKind kind,
                                   const AlmostContactStructure& acs,
                                   const Sampler& sampler, int trials,
                                   const ParamMode& params, double tol,
                                   int threads) {
  if (trials < 1) throw Error("compare_curvature requires trials >= 1");
  struct Trial {
    double residual = 0.0;
    SpaceFormParams params;
    Vector x, y, z;
  };
  const auto results = run_trials<Trial>(
      sampler, trials, threads, [&](int, Sampler& s) {
        Trial t;
        t.params = draw_params(params, s);
        t.x = s.unit_vector(acs.dim());
        t.y = s.unit_vector(acs.dim());
        t.z = s.unit_vector(acs.dim());
        const Vector diff = curvature_closed(kind, acs, t.params, t.x, t.y, t.z) -
                            curvature_oracle(kind, acs, t.params, t.x, t.y, t.z);
        t.residual = acs.metric().norm(diff);
        return t;
      });

  ComparisonReport report;
  report.kind = kind;
  report.trials = trials;
  report.tol = tol;
  for (size_t i = 0; i < results.size(); ++i) {
    const Trial& t = results[i];
    report.max_residual = std::max(report.max_residual, t.residual);
    if (t.residual > tol && !report.witness) {
      CurvatureWitness w;
      w.trial = static_cast<int>(i);
      w.params = t.params;
      w.x = t.x;
      w.y = t.y;
      w.z = t.z;
      w.residual = curvature_closed(kind, acs, t.params, t.x, t.y, t.z) -
                   curvature_oracle(kind, acs, t.params, t.x, t.y, t.z);
      const double rnorm = acs.metric().norm(w.residual);
      for (const auto& term : curvature_closed_terms(kind, acs, t.params, t.x, t.y, t.z)) {
        w.terms.push_back({term.label, acs.metric().norm(term.value),
                           acs.g(term.value, w.residual) / rnorm});
      }
      report.witness = std::move(w);
    }
  }
  report.match = report.max_residual <= tol;
  return report;
}

}  // namespace gssf
