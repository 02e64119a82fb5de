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

#include "gssf/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gssf {
namespace {

// value = g*g(X,Y) + tt*g(TX,TY) + bracket*{g(X,Y) + (m-1)eta(X)eta(Y)}
//       + ee*eta(X)eta(Y) + txy*g(TX,Y)
struct GeneralCoeffs {
  double g = 0.0;
  double tt = 0.0;
  double bracket = 0.0;
  double ee = 0.0;
  double txy = 0.0;
};

// value = sum_lambda (a0 + a2 lambda^2) g(U X, U Y) + ee*eta(X)eta(Y)
//       + txy*g(TX,Y)
struct AsiCoeffs {
  double a0 = 0.0;
  double a2 = 0.0;
  double ee = 0.0;
  double txy = 0.0;
};

bool use_printed(ConnectionKind kind, FormVariant variant) {
  return variant == FormVariant::kAsPrinted && kind != ConnectionKind::kLeviCivita;
}

GeneralCoeffs general_coeffs(ConnectionKind kind, FormVariant variant,
                             const SpaceFormParams& p, double m) {
  const double psi = p.psi();
  const bool printed = use_printed(kind, variant);
  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return {m * p.f1, 3 * p.f2, -p.f3, 0.0, 0.0};
    case ConnectionKind::kSemisymmetricMetric:
      if (printed) return {m * p.f1, 3 * p.f2, -(p.f3 - 1), 0.0, psi * (m - 1)};
      return {m * (p.f1 - 1), 3 * p.f2, -(p.f3 - 1), 0.0, psi * (m - 1)};
    case ConnectionKind::kSemisymmetricNonMetric:
      if (printed) return {m * p.f1, 3 * p.f2, -(p.f3 - 1), -m, psi};
      return {m * p.f1, 3 * p.f2, -p.f3, m, m * psi};
    case ConnectionKind::kSchoutenVanKampen:
      return {m * p.f1, 3 * p.f2 + psi * psi, -(p.f3 + psi * psi), 0.0, 0.0};
    case ConnectionKind::kTanakaWebster:
      return {m * p.f1, 3 * p.f2 + 2 * psi + psi * psi, -(p.f3 + psi * psi), 0.0, 0.0};
  }
  throw Error("unknown connection kind");
}

AsiCoeffs asi_coeffs(ConnectionKind kind, FormVariant variant,
                     const SpaceFormParams& p, double m) {
  const double psi = p.psi();
  const bool printed = use_printed(kind, variant);
  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return {m * p.f1 - p.f3, 3 * p.f2, m * (p.f1 - p.f3), 0.0};
    case ConnectionKind::kSemisymmetricMetric:
      if (printed) return {m * p.f1 - p.f3 + 1, 3 * p.f2, m * (p.f1 - p.f3 + 1), psi * (m - 1)};
      return {m * (p.f1 - 1) - p.f3 + 1, 3 * p.f2, m * (p.f1 - p.f3), psi * (m - 1)};
    case ConnectionKind::kSemisymmetricNonMetric:
      if (printed) return {m * p.f1 - p.f3 + 1, 3 * p.f2, m * (p.f1 - p.f3), psi};
      return {m * p.f1 - p.f3, 3 * p.f2, m * (p.f1 - p.f3 + 1), m * psi};
    case ConnectionKind::kSchoutenVanKampen:
      return {m * p.f1 - p.f3 - psi * psi, 3 * p.f2 + psi * psi,
              m * (p.f1 - p.f3 - psi * psi), 0.0};
    case ConnectionKind::kTanakaWebster:
      return {m * p.f1 - p.f3 - psi * psi, 3 * p.f2 + 2 * psi + psi * psi,
              m * (p.f1 - p.f3 - psi * psi), 0.0};
  }
  throw Error("unknown connection kind");
}

AsiCoeffs sasakian_printed_coeffs(ConnectionKind kind, double c, double m) {
  switch (kind) {
    case ConnectionKind::kSemisymmetricMetric:
      return {((m - 1) * c + 3 * m + 5) / 4, (3 * c - 3) / 4, 0.0, m - 1};
    case ConnectionKind::kSemisymmetricNonMetric:
      return {((m - 1) * c + 3 * m + 5) / 4, (3 * c - 3) / 4, 0.0, 1.0};
    case ConnectionKind::kSchoutenVanKampen:
      return {((m - 1) * c + 3 * (m - 1)) / 4, (3 * c + 1) / 4, 2 * m, 0.0};
    case ConnectionKind::kTanakaWebster:
      return {((m - 1) * c + 3 * (m - 1)) / 4, (3 * c + 9) / 4, 2 * m, 0.0};
    case ConnectionKind::kLeviCivita:
      break;
  }
  throw Error("no printed Sasakian form for this connection");
}

double eval_general(const GeneralCoeffs& c, const Submanifold& sub,
                    const Vector& x, const Vector& y) {
  const AlmostContactStructure& acs = sub.structure();
  const double m = sub.m();
  const Vector tx = sub.t_part(x);
  const double gxy = acs.g(x, y);
  const double ee = acs.eta(x) * acs.eta(y);
  return c.g * gxy + c.tt * acs.g(tx, sub.t_part(y)) +
         c.bracket * (gxy + (m - 1) * ee) + c.ee * ee + c.txy * acs.g(tx, y);
}

double eval_asi(const AsiCoeffs& c, const Submanifold& sub,
                const DistributionSplit& split, const Vector& x, const Vector& y) {
  const AlmostContactStructure& acs = sub.structure();
  const Metric& g = acs.metric();
  double out = 0.0;
  for (size_t i = 0; i < split.clusters.size(); ++i) {
    const double lambda = split.clusters[i].lambda;
    out += (c.a0 + c.a2 * lambda * lambda) *
           g.inner(split.project(i, x, g), split.project(i, y, g));
  }
  out += c.ee * acs.eta(x) * acs.eta(y);
  if (c.txy != 0.0) out += c.txy * acs.g(sub.t_part(x), y);
  return out;
}

double shape_part(const ShapeTerms& s, bool printed, double m) {
  if (printed) return (m + 1) * s.trace_term - s.quadratic_adj;
  return s.trace_term - s.quadratic_sq;
}

const DistributionSplit& require_split(const DistributionSplit* split) {
  if (split == nullptr) throw Error("this closed form requires a distribution split");
  return *split;
}

double scalar_base(ConnectionKind kind, FormVariant variant,
                   const SpaceFormParams& p, double m, double weighted) {
  const double psi = p.psi();
  const double norm = m * (m + 1);
  const bool printed = use_printed(kind, variant);
  switch (kind) {
    case ConnectionKind::kLeviCivita:
      return p.f1 + (3 * p.f2 * weighted - 2 * m * p.f3) / norm;
    case ConnectionKind::kSemisymmetricMetric:
      if (printed) return p.f1 + (3 * p.f2 * weighted - 2 * m * p.f3 + 2 * m) / norm;
      return p.f1 - 1 + (3 * p.f2 * weighted - 2 * m * (p.f3 - 1)) / norm;
    case ConnectionKind::kSemisymmetricNonMetric:
      return p.f1 + (3 * p.f2 * weighted - 2 * m * p.f3 + m) / norm;
    case ConnectionKind::kSchoutenVanKampen:
      return p.f1 + ((3 * p.f2 + psi * psi) * weighted - 2 * m * (p.f3 + psi * psi)) / norm;
    case ConnectionKind::kTanakaWebster:
      return p.f1 + ((3 * p.f2 + 2 * psi + psi * psi) * weighted -
                     2 * m * (p.f3 + psi * psi)) / norm;
  }
  throw Error("unknown connection kind");
}

void require_positive_m(const Submanifold& sub) {
  if (sub.m() < 1) throw Error("scalar curvature requires m >= 1");
}

}  // namespace

std::string_view to_string(FormVariant v) {
  return v == FormVariant::kAsPrinted ? "as_printed" : "oracle_derived";
}

std::string_view to_string(RicciConvention c) {
  return c == RicciConvention::kFirstLast ? "first_last" : "last_first";
}

double ricci_direct(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y, RicciConvention convention) {
  double out = 0.0;
  for (const Vector& e : sub.tangent_frame()) {
    out += convention == RicciConvention::kFirstLast
               ? induced_curvature(sub, kind, params, e, x, y, e)
               : induced_curvature(sub, kind, params, x, e, e, y);
  }
  return out;
}

ShapeTerms shape_terms(const Submanifold& sub, ConnectionKind kind,
                       const SpaceFormParams& params, const Vector& x,
                       const Vector& y) {
  const Eigen::VectorXd a = sub.tangent_coords(x);
  const Eigen::VectorXd b = sub.tangent_coords(y);
  ShapeTerms out;
  for (const Eigen::MatrixXd& mk : deformed_sff_blocks(sub, kind, params)) {
    out.trace_term += mk.trace() * a.dot(mk * b);
    out.quadratic_adj += a.dot(mk * mk.transpose() * b);
    out.quadratic_sq += a.dot(mk * mk * b);
  }
  return out;
}

ScalarShapeTerms scalar_shape_terms(const Submanifold& sub, ConnectionKind kind,
                                    const SpaceFormParams& params) {
  ScalarShapeTerms out;
  for (const Eigen::MatrixXd& mk : deformed_sff_blocks(sub, kind, params)) {
    out.mean_sq += mk.trace() * mk.trace();
    out.frobenius += mk.squaredNorm();
    out.twisted += (mk * mk).trace();
  }
  return out;
}

double ricci_closed(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y, const RicciForm& form, FormVariant variant,
                    const DistributionSplit* split) {
  const double m = sub.m();
  const bool printed = use_printed(kind, variant);
  const double shape = shape_part(shape_terms(sub, kind, params, x, y), printed, m);

  if (std::holds_alternative<GeneralForm>(form)) {
    return eval_general(general_coeffs(kind, variant, params, m), sub, x, y) + shape;
  }
  const DistributionSplit& s = require_split(split);
  if (std::holds_alternative<AsiForm>(form)) {
    return eval_asi(asi_coeffs(kind, variant, params, m), sub, s, x, y) + shape;
  }
  const double c = std::get<SasakianForm>(form).c;
  const SpaceFormParams expected = sasakian_params(c);
  if (std::abs(expected.f1 - params.f1) > 1e-12 || std::abs(expected.f2 - params.f2) > 1e-12 ||
      std::abs(expected.f3 - params.f3) > 1e-12) {
    throw Error("Sasakian form requires params equal to sasakian_params(c)");
  }
  const AsiCoeffs coeffs = printed ? sasakian_printed_coeffs(kind, c, m)
                                   : asi_coeffs(kind, variant, params, m);
  return eval_asi(coeffs, sub, s, x, y) + shape;
}

double scalar_direct(const Submanifold& sub, ConnectionKind kind,
                     const SpaceFormParams& params) {
  require_positive_m(sub);
  const double m = sub.m();
  double sum = 0.0;
  for (const Vector& ei : sub.tangent_frame()) {
    for (const Vector& ej : sub.tangent_frame()) {
      sum += induced_curvature(sub, kind, params, ei, ej, ej, ei);
    }
  }
  return sum / (m * (m + 1));
}

double scalar_closed(const Submanifold& sub, ConnectionKind kind,
                     const SpaceFormParams& params,
                     const DistributionSplit& split, FormVariant variant) {
  require_positive_m(sub);
  const double m = sub.m();
  const double norm = m * (m + 1);
  const double base = scalar_base(kind, variant, params, m, split.weighted_lambda_squares());
  const ScalarShapeTerms s = scalar_shape_terms(sub, kind, params);
  if (!use_printed(kind, variant)) return base + (s.mean_sq - s.twisted) / norm;
  switch (kind) {
    case ConnectionKind::kSemisymmetricMetric:
    case ConnectionKind::kSemisymmetricNonMetric:
      return base + s.mean_sq - s.frobenius;
    default:
      return base + (s.mean_sq - s.frobenius) / norm;
  }
}

double theorem_ricci_bound(const Submanifold& sub, ConnectionKind kind,
                           const SpaceFormParams& params,
                           const DistributionSplit& split, const Vector& x,
                           FormVariant variant) {
  return eval_asi(asi_coeffs(kind, variant, params, sub.m()), sub, split, x, x);
}

double theorem_scalar_bound(const Submanifold& sub, ConnectionKind kind,
                            const SpaceFormParams& params,
                            const DistributionSplit& split, FormVariant variant) {
  require_positive_m(sub);
  return scalar_base(kind, variant, params, sub.m(), split.weighted_lambda_squares());
}

bool TheoremReport::ricci_holds(FormVariant v) const {
  return (v == FormVariant::kAsPrinted ? min_slack_printed : min_slack_derived) >= -tol;
}

bool TheoremReport::scalar_holds(FormVariant v) const {
  return (v == FormVariant::kAsPrinted ? scalar_slack_printed : scalar_slack_derived) >= -tol;
}

TheoremReport theorem_inequalities(const Submanifold& sub, ConnectionKind kind,
                                   const SpaceFormParams& params,
                                   const DistributionSplit& split,
                                   Sampler& sampler, int trials, double tol) {
  if (classify_sff(sub, kind, params, kDefaultDropTol) == SffClass::kGeneric) {
    throw Error("theorem hypothesis violated");
  }
  TheoremReport report;
  report.kind = kind;
  report.trials = trials;
  report.tol = tol;
  report.min_slack_printed = std::numeric_limits<double>::infinity();
  report.min_slack_derived = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const Vector x = random_tangent(sub, sampler);
    const double s = ricci_direct(sub, kind, params, x, x);
    const double slack_printed =
        theorem_ricci_bound(sub, kind, params, split, x, FormVariant::kAsPrinted) - s;
    const double slack_derived =
        theorem_ricci_bound(sub, kind, params, split, x, FormVariant::kOracleDerived) - s;
    const ShapeTerms terms = shape_terms(sub, kind, params, x, x);
    if (slack_printed < report.min_slack_printed) {
      report.min_slack_printed = slack_printed;
      report.worst_x_printed = x;
    }
    if (slack_derived < report.min_slack_derived) {
      report.min_slack_derived = slack_derived;
      report.worst_x_derived = x;
    }
    report.max_adjoint_slack_residual = std::max(
        report.max_adjoint_slack_residual, std::abs(slack_derived - terms.quadratic_adj));
    report.max_square_slack_residual = std::max(
        report.max_square_slack_residual, std::abs(slack_derived - terms.quadratic_sq));
    report.max_minimality_residual =
        std::max(report.max_minimality_residual, std::abs(terms.trace_term));
  }
  if (trials < 1) {
    report.min_slack_printed = 0.0;
    report.min_slack_derived = 0.0;
  }
  const double tau = scalar_direct(sub, kind, params);
  report.scalar_slack_printed =
      theorem_scalar_bound(sub, kind, params, split, FormVariant::kAsPrinted) - tau;
  report.scalar_slack_derived =
      theorem_scalar_bound(sub, kind, params, split, FormVariant::kOracleDerived) - tau;
  return report;
}

EqualityReport equality_check(const Submanifold& sub, ConnectionKind kind,
                              const SpaceFormParams& params,
                              const DistributionSplit& split, Sampler& sampler,
                              double tol) {
  if (classify_sff(sub, kind, params, kDefaultDropTol) != SffClass::kTotallyGeodesic) {
    throw Error("equality check requires a totally geodesic submanifold");
  }
  std::vector<Vector> samples = sub.tangent_frame();
  for (int i = 0; i < 20; ++i) samples.push_back(random_tangent(sub, sampler));

  EqualityReport report;
  report.kind = kind;
  report.samples = static_cast<int>(samples.size());
  report.tol = tol;
  for (const Vector& x : samples) {
    const double s = ricci_direct(sub, kind, params, x, x);
    report.max_ricci_gap_derived = std::max(
        report.max_ricci_gap_derived,
        std::abs(theorem_ricci_bound(sub, kind, params, split, x, FormVariant::kOracleDerived) - s));
    report.max_ricci_gap_printed = std::max(
        report.max_ricci_gap_printed,
        std::abs(theorem_ricci_bound(sub, kind, params, split, x, FormVariant::kAsPrinted) - s));
  }
  const double tau = scalar_direct(sub, kind, params);
  report.scalar_gap_derived = std::abs(
      theorem_scalar_bound(sub, kind, params, split, FormVariant::kOracleDerived) - tau);
  report.scalar_gap_printed = std::abs(
      theorem_scalar_bound(sub, kind, params, split, FormVariant::kAsPrinted) - tau);
  report.pass = report.max_ricci_gap_derived <= tol && report.scalar_gap_derived <= tol;
  return report;
}

}  // namespace gssf
