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

#include "gssf/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "gssf/citations.hpp"
#include "gssf/submanifolds.hpp"

namespace gssf {
namespace {

constexpr std::array<Suite, 7> kSuiteOrder = {
    Suite::kStructure, Suite::kCurvature, Suite::kSubmanifold, Suite::kRicci,
    Suite::kScalar,    Suite::kTheorems,  Suite::kErrata};

constexpr int kTheoremSamplesPerTrial = 4;
constexpr int kErrataSearchTrials = 64;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string fmt(const SpaceFormParams& p) {
  return "(" + fmt(p.f1) + ", " + fmt(p.f2) + ", " + fmt(p.f3) + ")";
}

int kind_index(ConnectionKind kind) { return static_cast<int>(kind); }

// Sampler stream for (suite, connection, sub-check); independent of which
// suites or connections are selected.
std::uint64_t stream(Suite suite, int kind, int extra = 0) {
  return (static_cast<std::uint64_t>(suite) << 16) |
         (static_cast<std::uint64_t>(kind) << 8) | static_cast<std::uint64_t>(extra);
}

// One trial's contribution to one check.
struct Sample {
  double residual = 0.0;
  std::string configuration;
};

CheckRecord reduce(std::string name, std::string cite, std::string variant,
                   const std::vector<Sample>& samples, double tol, bool adjudicated) {
  CheckRecord record;
  record.name = std::move(name);
  record.citation = std::move(cite);
  record.variant = std::move(variant);
  record.trials = static_cast<int>(samples.size());
  for (size_t t = 0; t < samples.size(); ++t) {
    record.max_residual = std::max(record.max_residual, samples[t].residual);
    if (!record.witness && !(samples[t].residual <= tol)) {
      record.witness = CheckWitness{static_cast<int>(t), samples[t].configuration,
                                    samples[t].residual};
    }
  }
  const bool within = !record.witness.has_value();
  if (adjudicated) {
    record.verdict = within ? Verdict::kPass : Verdict::kFail;
  } else {
    record.verdict = within ? Verdict::kHolds : Verdict::kViolated;
  }
  return record;
}

// Column j of a trials x checks table.
std::vector<Sample> column(const std::vector<std::vector<Sample>>& rows, size_t j) {
  std::vector<Sample> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(j));
  return out;
}

struct Setup {
  Submanifold sub;
  SpaceFormParams params;
  DistributionSplit split;
  std::string label;
};

Setup draw_setup(const AlmostContactStructure& acs, int m, const ParamMode& mode,
                 Sampler& s, bool minimal) {
  const Submanifold bare = random_submanifold(acs, m, s);
  Submanifold sub = bare.with_sff(minimal ? random_minimal_sff(bare, s) : random_sff(bare, s));
  const SpaceFormParams params = draw_params(mode, s);
  DistributionSplit split = asi_split(sub);
  std::string label = "m=" + std::to_string(m) + (minimal ? " minimal" : "") +
                      " random submanifold, params " + fmt(params);
  return {std::move(sub), params, std::move(split), std::move(label)};
}

std::vector<ConnectionKind> selected_kinds(const RunConfig& c, bool deformed_only) {
  std::vector<ConnectionKind> out;
  for (ConnectionKind kind : kAllConnections) {
    if (deformed_only && kind == ConnectionKind::kLeviCivita) continue;
    if (c.connection && *c.connection != kind) continue;
    out.push_back(kind);
  }
  return out;
}

std::string kind_name(ConnectionKind kind) { return std::string(to_string(kind)); }

constexpr std::string_view kNoVariant = "n/a";
const std::string kPrinted(to_string(FormVariant::kAsPrinted));
const std::string kDerived(to_string(FormVariant::kOracleDerived));

void structure_suite(const RunConfig& c, std::vector<CheckRecord>& out) {
  const ValidationReport report = validate(canonical_structure(c.n), c.tol);
  for (const IdentityResidual& r : report.residuals) {
    out.push_back(reduce("structure: " + r.identity, citation(Formula::kStructure),
                         std::string(kNoVariant), {{r.residual, "canonical structure, n=" + std::to_string(c.n)}},
                         c.tol, true));
  }
}

void curvature_suite(const RunConfig& c, const AlmostContactStructure& acs,
                     const Sampler& root, std::vector<CheckRecord>& out) {
  for (ConnectionKind kind : selected_kinds(c, false)) {
    const ComparisonReport cmp =
        compare_curvature(kind, acs, root.derive(stream(Suite::kCurvature, kind_index(kind))),
                          c.trials, c.params, c.tol, c.threads);
    CheckRecord record;
    record.name = "curvature: " + kind_name(kind);
    record.citation = citation(Formula::kCurvature, kind);
    record.variant = kPrinted;
    record.trials = cmp.trials;
    record.max_residual = cmp.max_residual;
    record.verdict = cmp.match ? Verdict::kPass : Verdict::kFail;
    if (cmp.witness) {
      const CurvatureWitness& w = *cmp.witness;
      std::string config = "random unit X, Y, Z, params " + fmt(w.params);
      if (!w.terms.empty()) {
        const auto top = std::max_element(
            w.terms.begin(), w.terms.end(), [](const TermContribution& a, const TermContribution& b) {
              return std::abs(a.along_residual) < std::abs(b.along_residual);
            });
        config += ", largest term along the residual: " + top->label;
      }
      record.witness = CheckWitness{w.trial, config, acs.metric().norm(w.residual)};
    }
    out.push_back(std::move(record));
  }
}

void submanifold_suite(const RunConfig& c, const AlmostContactStructure& acs,
                       const Sampler& root, std::vector<CheckRecord>& out) {
  const std::function<std::vector<Sample>(int, Sampler&)> trial = [&](int, Sampler& s) {
    const Setup setup = draw_setup(acs, c.m, c.params, s, false);
    const Submanifold& sub = setup.sub;
    const Metric& g = acs.metric();
    const Vector x = random_tangent(sub, s);
    const Vector y = random_tangent(sub, s);

    Sampler pair_sampler = s.derive(0);
    const double slant =
        verify_slant_identity(sub, setup.split, pair_sampler, 1, c.tol).max_residual;
    const double skew = std::abs(acs.g(sub.t_part(x), y) + acs.g(x, sub.t_part(y)));

    Vector resolved = Vector::Zero(acs.dim());
    for (size_t i = 0; i < setup.split.clusters.size(); ++i) {
      resolved += setup.split.project(i, x, g);
    }
    const double resolution = g.norm(resolved - (x - acs.eta(x) * acs.xi()));

    double f_norm = 0.0;
    for (size_t i = 0; i < setup.split.clusters.size(); ++i) {
      const Vector u = setup.split.project(i, x, g);
      const double lambda = setup.split.clusters[i].lambda;
      f_norm = std::max(f_norm, std::abs(g.norm_squared(sub.f_part(u)) -
                                         (1 - lambda * lambda) * g.norm_squared(u)));
    }

    double mean = 0.0;
    const Vector h_lc = mean_curvature(sub, ConnectionKind::kLeviCivita, setup.params);
    for (ConnectionKind kind : kDeformedConnections) {
      mean = std::max(mean, g.norm(mean_curvature(sub, kind, setup.params) - h_lc));
    }
    return std::vector<Sample>{{slant, setup.label}, {skew, setup.label},
                               {resolution, setup.label}, {f_norm, setup.label},
                               {mean, setup.label}};
  };
  const auto rows = run_trials<std::vector<Sample>>(
      root.derive(stream(Suite::kSubmanifold, 0)), c.trials, c.threads, trial);
  out.push_back(reduce("submanifold: slant identity", citation(Formula::kSlantIdentity),
                       std::string(kNoVariant), column(rows, 0), c.tol, true));
  out.push_back(reduce("submanifold: T is skew", citation(Formula::kSlantIdentity),
                       std::string(kNoVariant), column(rows, 1), c.tol, true));
  out.push_back(reduce("submanifold: projectors resolve the distribution",
                       citation(Formula::kSlantIdentity), std::string(kNoVariant),
                       column(rows, 2), c.tol, true));
  out.push_back(reduce("submanifold: |FX|^2 = (1 - lambda^2)|X|^2 per cluster",
                       citation(Formula::kSlantIdentity), std::string(kNoVariant),
                       column(rows, 3), c.tol, true));
  out.push_back(reduce("submanifold: deformed mean curvature equals Levi-Civita",
                       citation(Formula::kGauss), std::string(kNoVariant), column(rows, 4),
                       c.tol, true));
}

void ricci_suite(const RunConfig& c, const AlmostContactStructure& acs,
                 const Sampler& root, std::vector<CheckRecord>& out) {
  for (ConnectionKind kind : selected_kinds(c, false)) {
    const bool printed_exists = kind != ConnectionKind::kLeviCivita;
    const std::function<std::vector<Sample>(int, Sampler&)> trial = [&](int, Sampler& s) {
      const Setup setup = draw_setup(acs, c.m, c.params, s, false);
      const Vector x = random_tangent(setup.sub, s);
      const Vector y = random_tangent(setup.sub, s);
      const double direct = ricci_direct(setup.sub, kind, setup.params, x, y, c.convention);
      auto closed = [&](const RicciForm& form, FormVariant v, const SpaceFormParams& p) {
        return ricci_closed(setup.sub, kind, p, x, y, form, v, &setup.split);
      };
      double sasakian_c = 0.0;
      if (const auto* mode = std::get_if<SasakianParams>(&c.params)) {
        sasakian_c = mode->c;
      } else {
        sasakian_c = s.scalar(-1.0, 3.0);
      }
      const SpaceFormParams sp = sasakian_params(sasakian_c);
      const double direct_sasakian = ricci_direct(setup.sub, kind, sp, x, y, c.convention);
      const std::string sas_label = setup.label + ", Sasakian c=" + fmt(sasakian_c);

      std::vector<Sample> row = {
          {std::abs(closed(GeneralForm{}, FormVariant::kOracleDerived, setup.params) - direct),
           setup.label},
          {std::abs(closed(AsiForm{}, FormVariant::kOracleDerived, setup.params) - direct),
           setup.label},
          {std::abs(closed(SasakianForm{sasakian_c}, FormVariant::kOracleDerived, sp) -
                    direct_sasakian),
           sas_label},
      };
      if (printed_exists) {
        row.push_back(
            {std::abs(closed(GeneralForm{}, FormVariant::kAsPrinted, setup.params) - direct),
             setup.label});
        row.push_back(
            {std::abs(closed(AsiForm{}, FormVariant::kAsPrinted, setup.params) - direct),
             setup.label});
        row.push_back({std::abs(closed(SasakianForm{sasakian_c}, FormVariant::kAsPrinted, sp) -
                                direct_sasakian),
                       sas_label});
      }
      return row;
    };
    const auto rows = run_trials<std::vector<Sample>>(
        root.derive(stream(Suite::kRicci, kind_index(kind))), c.trials, c.threads, trial);
    const std::string name = kind_name(kind);
    const std::array<Formula, 3> forms = {Formula::kRicciGeneral, Formula::kRicciAsi,
                                          Formula::kRicciSasakian};
    const std::array<std::string, 3> labels = {"general", "asi", "sasakian"};
    for (size_t j = 0; j < 3; ++j) {
      out.push_back(reduce("ricci " + labels[j] + ": " + name, citation(forms[j], kind),
                           kDerived, column(rows, j), c.tol, true));
    }
    if (printed_exists) {
      for (size_t j = 0; j < 3; ++j) {
        out.push_back(reduce("ricci " + labels[j] + ": " + name, citation(forms[j], kind),
                             kPrinted, column(rows, 3 + j), c.tol, false));
      }
    }

    if (kind == ConnectionKind::kSemisymmetricMetric) {
      // Fixed regression: span{e1, phi e1, xi}, h = 0, params (1, 0, 0).
      const Eigen::Index d = acs.dim();
      const std::vector<Vector> span = {basis_vector(d, 0), acs.apply_phi(basis_vector(d, 0)),
                                        acs.xi()};
      const Submanifold sub = Submanifold::build(acs, span);
      const SpaceFormParams unit{1.0, 0.0, 0.0};
      const Vector& e1 = sub.tangent_frame()[0];
      const Vector& xi = sub.tangent_frame()[2];
      const std::string label = "span{e1, phi e1, xi}, h=0, params (1, 0, 0)";
      auto printed = [&](const Vector& v) {
        return ricci_closed(sub, kind, unit, v, v, GeneralForm{}, FormVariant::kAsPrinted);
      };
      const std::vector<Sample> pinned = {
          {std::abs(ricci_direct(sub, kind, unit, e1, e1, c.convention) - 1.0), label + ", S(e1,e1) = 1"},
          {std::abs(ricci_direct(sub, kind, unit, xi, xi, c.convention) - 2.0), label + ", S(xi,xi) = 2"},
          {std::abs(printed(e1) - 3.0), label + ", printed S(e1,e1) = 3"},
          {std::abs(printed(xi) - 4.0), label + ", printed S(xi,xi) = 4"},
      };
      out.push_back(reduce("ricci pinned regression: " + name,
                           citation(Formula::kRicciGeneral, kind), kNoVariant.data(), pinned,
                           c.tol, true));
    }
  }
}

void scalar_suite(const RunConfig& c, const AlmostContactStructure& acs,
                  const Sampler& root, std::vector<CheckRecord>& out) {
  for (ConnectionKind kind : selected_kinds(c, false)) {
    const bool printed_exists = kind != ConnectionKind::kLeviCivita;
    const std::function<std::vector<Sample>(int, Sampler&)> trial = [&](int, Sampler& s) {
      const Setup setup = draw_setup(acs, c.m, c.params, s, false);
      const double tau = scalar_direct(setup.sub, kind, setup.params);
      double trace = 0.0;
      for (const Vector& e : setup.sub.tangent_frame()) {
        trace += ricci_direct(setup.sub, kind, setup.params, e, e, c.convention);
      }
      const double m = setup.sub.m();
      std::vector<Sample> row = {
          {std::abs(scalar_closed(setup.sub, kind, setup.params, setup.split,
                                  FormVariant::kOracleDerived) - tau),
           setup.label},
          {std::abs(m * (m + 1) * tau - trace), setup.label},
      };
      if (printed_exists) {
        row.push_back({std::abs(scalar_closed(setup.sub, kind, setup.params, setup.split,
                                              FormVariant::kAsPrinted) - tau),
                       setup.label});
      }
      return row;
    };
    const auto rows = run_trials<std::vector<Sample>>(
        root.derive(stream(Suite::kScalar, kind_index(kind))), c.trials, c.threads, trial);
    const std::string name = kind_name(kind);
    out.push_back(reduce("scalar: " + name, citation(Formula::kScalar, kind), kDerived,
                         column(rows, 0), c.tol, true));
    out.push_back(reduce("scalar: m(m+1) tau = sum_i S(E_i,E_i): " + name,
                         citation(Formula::kScalarDefinition, kind), std::string(kNoVariant),
                         column(rows, 1), c.tol, true));
    if (printed_exists) {
      out.push_back(reduce("scalar: " + name, citation(Formula::kScalar, kind), kPrinted,
                           column(rows, 2), c.tol, false));
    }
  }
}

void theorem_suite(const RunConfig& c, const AlmostContactStructure& acs,
                   const Sampler& root, std::vector<CheckRecord>& out) {
  for (ConnectionKind kind : selected_kinds(c, true)) {
    const std::function<std::vector<Sample>(int, Sampler&)> trial = [&](int, Sampler& s) {
      const Setup setup = draw_setup(acs, c.m, c.params, s, true);
      const TheoremReport r = theorem_inequalities(setup.sub, kind, setup.params, setup.split,
                                                   s, kTheoremSamplesPerTrial, c.tol);
      const std::string& l = setup.label;
      return std::vector<Sample>{
          {r.max_minimality_residual, l},
          {r.max_square_slack_residual, l},
          {r.max_adjoint_slack_residual, l},
          {std::max(0.0, -r.min_slack_printed), l},
          {std::max(0.0, -r.min_slack_derived), l},
          {std::max(0.0, -r.scalar_slack_printed), l},
          {std::max(0.0, -r.scalar_slack_derived), l},
      };
    };
    const auto rows = run_trials<std::vector<Sample>>(
        root.derive(stream(Suite::kTheorems, kind_index(kind))), c.trials, c.threads, trial);
    const std::string name = kind_name(kind);
    out.push_back(reduce("theorem: minimality identity: " + name,
                         citation(Formula::kMinimality, kind), std::string(kNoVariant),
                         column(rows, 0), c.tol, true));
    out.push_back(reduce("theorem: slack = sum_k g(A_k^2 X, X): " + name,
                         citation(Formula::kSlackIdentity, kind), kDerived, column(rows, 1),
                         c.tol, true));
    out.push_back(reduce("theorem: slack = sum_k g(A_k X, A_k X): " + name,
                         citation(Formula::kSlackIdentity, kind), kDerived, column(rows, 2),
                         c.tol, false));
    out.push_back(reduce("theorem (i): " + name, citation(Formula::kTheoremRicci, kind),
                         kPrinted, column(rows, 3), c.tol, false));
    out.push_back(reduce("theorem (i): " + name, citation(Formula::kTheoremRicci, kind),
                         kDerived, column(rows, 4), c.tol, false));
    out.push_back(reduce("theorem (ii): " + name, citation(Formula::kTheoremScalar, kind),
                         kPrinted, column(rows, 5), c.tol, false));
    out.push_back(reduce("theorem (ii): " + name, citation(Formula::kTheoremScalar, kind),
                         kDerived, column(rows, 6), c.tol, false));

    // Equality case: totally geodesic invariant submanifold span{e1, phi e1, xi}.
    const Eigen::Index d = acs.dim();
    const std::vector<Vector> span = {basis_vector(d, 0), acs.apply_phi(basis_vector(d, 0)),
                                      acs.xi()};
    const Submanifold flat = Submanifold::build(acs, span);
    const DistributionSplit split = asi_split(flat);
    const std::function<std::vector<Sample>(int, Sampler&)> equality = [&](int, Sampler& s) {
      const SpaceFormParams params = draw_params(c.params, s);
      const EqualityReport r = equality_check(flat, kind, params, split, s, c.tol);
      const std::string label = "span{e1, phi e1, xi}, h=0, params " + fmt(params);
      return std::vector<Sample>{
          {std::max(r.max_ricci_gap_derived, r.scalar_gap_derived), label},
          {std::max(r.max_ricci_gap_printed, r.scalar_gap_printed), label},
      };
    };
    const auto eq_rows = run_trials<std::vector<Sample>>(
        root.derive(stream(Suite::kTheorems, kind_index(kind), 1)), c.trials, c.threads,
        equality);
    out.push_back(reduce("theorem equality (totally geodesic): " + name,
                         citation(Formula::kEquality, kind), kDerived, column(eq_rows, 0), c.tol,
                         true));
    out.push_back(reduce("theorem equality (totally geodesic): " + name,
                         citation(Formula::kEquality, kind), kPrinted, column(eq_rows, 1), c.tol,
                         false));
  }
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::kStructure: return "structure";
    case Suite::kCurvature: return "curvature";
    case Suite::kSubmanifold: return "submanifold";
    case Suite::kRicci: return "ricci";
    case Suite::kScalar: return "scalar";
    case Suite::kTheorems: return "theorems";
    case Suite::kErrata: return "errata";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kStructure, Suite::kCurvature, Suite::kSubmanifold, Suite::kRicci,
                  Suite::kScalar, Suite::kTheorems, Suite::kErrata, Suite::kAll}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
  return f == OutputFormat::kText ? "text" : "json";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
  }
  return "unknown";
}

std::string validate_config(const RunConfig& c) {
  if (c.n < 2) return "--n must be at least 2";
  if (c.m < 1 || c.m > 2 * c.n - 1) return "--m must satisfy 1 <= m <= 2n - 1";
  if (c.trials < 1) return "--trials must be at least 1";
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) return "--tol must be a positive number";
  if (c.threads < 1) return "--threads must be at least 1";
  if (const auto* r = std::get_if<RandomParams>(&c.params)) {
    if (!(r->lo < r->hi)) return "--random-params requires LO < HI";
  }
  return {};
}

bool RunReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckRecord& r) { return r.verdict == Verdict::kFail; });
}

int exit_code(const RunReport& report) { return report.ok() ? 0 : 1; }

RunReport run(const RunConfig& config) {
  if (const std::string problem = validate_config(config); !problem.empty()) {
    throw Error(problem);
  }
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.config = config;
  const AlmostContactStructure acs = canonical_structure(config.n);
  const Sampler root(config.seed);
  auto wants = [&](Suite s) { return config.suite == Suite::kAll || config.suite == s; };

  for (Suite s : kSuiteOrder) {
    if (!wants(s)) continue;
    switch (s) {
      case Suite::kStructure: structure_suite(config, report.checks); break;
      case Suite::kCurvature: curvature_suite(config, acs, root, report.checks); break;
      case Suite::kSubmanifold: submanifold_suite(config, acs, root, report.checks); break;
      case Suite::kRicci: ricci_suite(config, acs, root, report.checks); break;
      case Suite::kScalar: scalar_suite(config, acs, root, report.checks); break;
      case Suite::kTheorems: theorem_suite(config, acs, root, report.checks); break;
      case Suite::kErrata: {
        const std::vector<SpaceFormParams> grid = default_param_grid();
        report.errata = errata_report(acs, root.derive(stream(Suite::kErrata, 0)), grid,
                                      config.tol, kErrataSearchTrials);
        break;
      }
      case Suite::kAll: break;
    }
  }
  report.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gssf
