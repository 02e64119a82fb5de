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

#include "gssf/errata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "gssf/citations.hpp"
#include "gssf/connections.hpp"
#include "gssf/invariants.hpp"
#include "gssf/submanifolds.hpp"

namespace gssf {
namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string fmt(const SpaceFormParams& p) {
  return "(" + fmt(p.f1) + ", " + fmt(p.f2) + ", " + fmt(p.f3) + ")";
}

std::string fmt_coords(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt(v(i));
  }
  return out + "]";
}

struct Scenario {
  std::string label;
  Submanifold sub;
  SpaceFormParams params;
  Vector x;
  Vector y;
  double c = 1.0;  // meaningful for Sasakian scenarios only
};

struct Values {
  double printed = 0.0;
  double derived = 0.0;
};

using Probe = std::function<Values(const Scenario&)>;

// A block of a printed formula and how to find a witness for it.
struct Block {
  std::string location;
  std::string printed;
  std::string derived;
  Probe probe;
  // true: flag only derived > printed (a violated upper bound).
  bool bound = false;
  std::vector<Scenario> fixed;
  std::function<Scenario(int, Sampler&)> random;
};

// Horizontal unit vectors u1, u2 with u1, phi u1, u2, phi u2 orthonormal.
struct Seeds {
  Vector u1;
  Vector u2;
};

Seeds make_seeds(const AlmostContactStructure& acs) {
  const Metric& g = acs.metric();
  std::vector<Vector> taken = {acs.xi()};
  std::vector<Vector> picked;
  for (Eigen::Index i = 0; i < acs.dim() && picked.size() < 2; ++i) {
    Vector v = basis_vector(acs.dim(), i);
    v -= detail::project_unchecked(v, taken, g);
    if (g.norm(v) < 1e-6) continue;
    v /= g.norm(v);
    picked.push_back(v);
    taken.push_back(v);
    Vector pv = acs.apply_phi(v);
    pv -= detail::project_unchecked(pv, std::span<const Vector>(taken).first(taken.size() - 1), g);
    taken.push_back(pv / g.norm(pv));
  }
  if (picked.size() < 2) throw Error("errata report requires n >= 2");
  return {picked[0], picked[1]};
}

Submanifold invariant_sub(const AlmostContactStructure& acs, const Seeds& s) {
  const std::vector<Vector> span = {s.u1, acs.apply_phi(s.u1), acs.xi()};
  return Submanifold::build(acs, span);
}

Submanifold anti_invariant_sub(const AlmostContactStructure& acs, const Seeds& s) {
  const std::vector<Vector> span = {s.u1, acs.apply_phi(s.u2), acs.xi()};
  return Submanifold::build(acs, span);
}

SffCoefficients zero_blocks(const Submanifold& sub) {
  const auto size = static_cast<Eigen::Index>(sub.tangent_frame().size());
  return SffCoefficients(static_cast<size_t>(sub.codim()), Eigen::MatrixXd::Zero(size, size));
}

// h(E_i, xi) = h(xi, E_i) = s F E_i for the first two frame vectors.
SffCoefficients xi_coupled_blocks(const Submanifold& sub, double s) {
  SffCoefficients blocks = zero_blocks(sub);
  const auto last = static_cast<Eigen::Index>(sub.m());
  for (Eigen::Index i = 0; i < 2 && i < last; ++i) {
    const Eigen::VectorXd f =
        sub.normal_coords(sub.f_part(sub.tangent_frame()[static_cast<size_t>(i)]));
    for (size_t k = 0; k < blocks.size(); ++k) {
      blocks[k](i, last) = s * f(static_cast<Eigen::Index>(k));
      blocks[k](last, i) = s * f(static_cast<Eigen::Index>(k));
    }
  }
  return blocks;
}

const std::string kInvariantLabel = "invariant submanifold span{e1, phi e1, xi}, m=2";
const std::string kAntiLabel = "anti-invariant submanifold span{e1, phi e2, xi}, m=2";

Scenario scenario(std::string label, Submanifold sub, SpaceFormParams params,
                  size_t xi, size_t yi) {
  Vector x = sub.tangent_frame().at(xi);
  Vector y = sub.tangent_frame().at(yi);
  return {std::move(label), std::move(sub), params, std::move(x), std::move(y)};
}

std::string frame_name(const Submanifold& sub, size_t i) {
  return i + 1 == sub.tangent_frame().size() ? "xi" : "E" + std::to_string(i + 1);
}

// Fixed witness configurations shared by several blocks.
struct Fixtures {
  std::vector<Scenario> pinned;          // invariant, h=0, (1,0,0): X=Y=E1, then xi
  std::vector<Scenario> trace;           // invariant, h_11 = F_1
  std::vector<Scenario> anti_flat;       // anti-invariant, h=0, (1,0,0)
  std::vector<Scenario> bracket;         // invariant, h_11 = h_22 = F_1
  std::vector<Scenario> sasakian;        // invariant, h=0, c=1
  std::vector<Scenario> theorem;         // minimal configurations violating bounds
};

Fixtures make_fixtures(const AlmostContactStructure& acs) {
  const Seeds seeds = make_seeds(acs);
  const Submanifold inv = invariant_sub(acs, seeds);
  const Submanifold anti = anti_invariant_sub(acs, seeds);
  const SpaceFormParams unit{1.0, 0.0, 0.0};
  const std::string h0 = ", h=0, params " + fmt(unit);

  Fixtures f;
  for (size_t i : {size_t{0}, size_t{2}}) {
    const std::string at = ", X=Y=" + frame_name(inv, i);
    f.pinned.push_back(scenario(kInvariantLabel + h0 + at, inv, unit, i, i));
  }

  SffCoefficients one = zero_blocks(inv);
  one[0](0, 0) = 1.0;
  f.trace.push_back(scenario(kInvariantLabel + ", h(E1,E1)=F1, params " + fmt(unit) + ", X=Y=E1",
                             inv.with_sff(one), unit, 0, 0));

  f.anti_flat.push_back(scenario(kAntiLabel + h0 + ", X=Y=E1", anti, unit, 0, 0));
  // With f1 - f3 = 1 the xi row and xi column of h~ cancel for Tanaka-Webster.
  const SpaceFormParams doubled{2.0, 0.0, 0.0};
  const std::string h0_doubled = ", h=0, params " + fmt(doubled);
  f.anti_flat.push_back(scenario(kAntiLabel + h0_doubled + ", X=Y=E1", anti, doubled, 0, 0));

  SffCoefficients two = zero_blocks(inv);
  two[0](0, 0) = 1.0;
  two[0](1, 1) = 1.0;
  f.bracket.push_back(scenario(kInvariantLabel + ", h(E1,E1)=h(E2,E2)=F1, params " + fmt(unit),
                               inv.with_sff(two), unit, 0, 0));
  f.bracket.push_back(scenario(kAntiLabel + h0, anti, unit, 0, 0));
  f.bracket.push_back(scenario(kAntiLabel + h0_doubled, anti, doubled, 0, 0));

  for (size_t i : {size_t{0}, size_t{2}}) {
    Scenario s = scenario(kInvariantLabel + ", h=0, Sasakian c=1, X=Y=" + frame_name(inv, i),
                          inv, sasakian_params(1.0), i, i);
    s.c = 1.0;
    f.sasakian.push_back(std::move(s));
  }

  f.theorem.push_back(scenario(kInvariantLabel + h0 + ", X=xi", inv, unit, 2, 2));
  // s = -(f1 - f3)/2 and s = -(f1 - f3 + 1)/2 minimize the xi-coupled slack
  // for the two phi-valued deformations.
  const std::vector<std::pair<SpaceFormParams, double>> couplings = {
      {{1.0, 0.0, 0.0}, -0.5}, {{2.0, 0.0, 0.0}, -1.5}};
  for (const auto& [params, s] : couplings) {
    f.theorem.push_back(scenario(
        kAntiLabel + ", h(Ei,xi)=h(xi,Ei)=" + fmt(s) + " F Ei (i=1,2), params " + fmt(params) +
            ", X=E1",
        anti.with_sff(xi_coupled_blocks(anti, s)), params, 0, 0));
  }
  return f;
}

std::function<Scenario(int, Sampler&)> random_scenarios(
    const AlmostContactStructure& acs, std::span<const SpaceFormParams> grid,
    bool minimal, bool sasakian) {
  static constexpr double kSasakianC[] = {-1.0, 0.0, 1.0, 2.0, 3.0};
  std::vector<SpaceFormParams> params(grid.begin(), grid.end());
  return [&acs, params, minimal, sasakian](int t, Sampler& s) {
    const int m = 1 + t % (2 * acs.n() - 1);
    const Submanifold bare = random_submanifold(acs, m, s);
    const Submanifold sub =
        bare.with_sff(minimal ? random_minimal_sff(bare, s) : random_sff(bare, s));
    double c = 1.0;
    SpaceFormParams p;
    if (sasakian) {
      c = kSasakianC[t % 5];
      p = sasakian_params(c);
    } else {
      p = params.at(static_cast<size_t>(t) % params.size());
    }
    Vector x = random_tangent(sub, s);
    Vector y = random_tangent(sub, s);
    std::string label = "random m=" + std::to_string(m) + " submanifold (trial " +
                        std::to_string(t) + "), " + (minimal ? "minimal " : "") +
                        "random h, params " + fmt(p) + ", X=" +
                        fmt_coords(sub.tangent_coords(x)) + ", Y=" +
                        fmt_coords(sub.tangent_coords(y)) + " in frame coordinates";
    Scenario out{std::move(label), sub, p, std::move(x), std::move(y), c};
    return out;
  };
}

struct Expressions {
  std::string general_printed, general_derived;
  std::string asi_printed, asi_derived;
  std::string sasakian_printed, sasakian_derived;
  std::string scalar_printed, scalar_derived;
};

Expressions expressions(ConnectionKind kind) {
  const std::string asi_svk =
      "sum_l [m f1 + 3 f2 l^2 - f3 + (f1-f3)^2 (l^2-1)] g(U_l X, U_l Y) + m[f1 - f3 - "
      "(f1-f3)^2] eta(X)eta(Y)";
  const std::string asi_tw =
      "sum_l [m f1 + {3 f2 + 2(f1-f3)} l^2 - f3 + (f1-f3)^2 (l^2-1)] g(U_l X, U_l Y) + m[f1 "
      "- f3 - (f1-f3)^2] eta(X)eta(Y)";
  switch (kind) {
    case ConnectionKind::kSemisymmetricMetric:
      return {
          "m f1 g(X,Y) + 3 f2 g(TX,TY) - (f3-1){g(X,Y) + (m-1) eta(X)eta(Y)} + (f1-f3)(m-1) "
          "g(TX,Y)",
          "m (f1-1) g(X,Y) + 3 f2 g(TX,TY) - (f3-1){g(X,Y) + (m-1) eta(X)eta(Y)} + "
          "(f1-f3)(m-1) g(TX,Y)",
          "sum_l (m f1 + 3 f2 l^2 - f3 + 1) g(U_l X, U_l Y) + m(f1-f3+1) eta(X)eta(Y) + "
          "(f1-f3)(m-1) g(TX,Y)",
          "sum_l (m (f1-1) + 3 f2 l^2 - f3 + 1) g(U_l X, U_l Y) + m(f1-f3) eta(X)eta(Y) + "
          "(f1-f3)(m-1) g(TX,Y)",
          "sum_l ((m-1+3 l^2)c + 3(m-l^2) + 5)/4 g(U_l X, U_l Y) + (m-1) g(TX,Y)",
          "sum_l ((m-1+3 l^2)c - m - 3 l^2 + 5)/4 g(U_l X, U_l Y) + m eta(X)eta(Y) + (m-1) "
          "g(TX,Y)",
          "f1 + [3 f2 N - 2m f3 + 2m]/(m(m+1)), N = sum_l n(l) l^2",
          "f1 - 1 + [3 f2 N - 2m (f3-1)]/(m(m+1)), N = sum_l n(l) l^2",
      };
    case ConnectionKind::kSemisymmetricNonMetric:
      return {
          "m f1 g(X,Y) + 3 f2 g(TX,TY) - (f3-1){g(X,Y) + (m-1) eta(X)eta(Y)} - m "
          "eta(X)eta(Y) + (f1-f3) g(TX,Y)",
          "m f1 g(X,Y) + 3 f2 g(TX,TY) - f3{g(X,Y) + (m-1) eta(X)eta(Y)} + m eta(X)eta(Y) + "
          "m(f1-f3) g(TX,Y)",
          "sum_l (m f1 + 3 f2 l^2 - f3 + 1) g(U_l X, U_l Y) + m(f1-f3) eta(X)eta(Y) + "
          "(f1-f3) g(TX,Y)",
          "sum_l (m f1 + 3 f2 l^2 - f3) g(U_l X, U_l Y) + m(f1-f3+1) eta(X)eta(Y) + m(f1-f3) "
          "g(TX,Y)",
          "sum_l ((m-1+3 l^2)c + 3(m-l^2) + 5)/4 g(U_l X, U_l Y) + g(TX,Y)",
          "sum_l ((m-1+3 l^2)c + 3(m-l^2) + 1)/4 g(U_l X, U_l Y) + 2m eta(X)eta(Y) + m "
          "g(TX,Y)",
          "f1 + [3 f2 N - 2m f3 + m]/(m(m+1)), N = sum_l n(l) l^2",
          "f1 + [3 f2 N - 2m f3 + m]/(m(m+1)), N = sum_l n(l) l^2",
      };
    case ConnectionKind::kSchoutenVanKampen:
      return {
          "m f1 g(X,Y) + {3 f2 + (f1-f3)^2} g(TX,TY) - {f3 + (f1-f3)^2}{g(X,Y) + (m-1) "
          "eta(X)eta(Y)}",
          "m f1 g(X,Y) + {3 f2 + (f1-f3)^2} g(TX,TY) - {f3 + (f1-f3)^2}{g(X,Y) + (m-1) "
          "eta(X)eta(Y)}",
          asi_svk,
          asi_svk,
          "sum_l ((m-1+3 l^2)c + 3(m-1) + l^2)/4 g(U_l X, U_l Y) + 2m eta(X)eta(Y)",
          "sum_l ((m-1+3 l^2)c + 3(m-1) + l^2)/4 g(U_l X, U_l Y)",
          "f1 + [{3 f2 + (f1-f3)^2} N - 2m{f3 + (f1-f3)^2}]/(m(m+1)), N = sum_l n(l) l^2",
          "f1 + [{3 f2 + (f1-f3)^2} N - 2m{f3 + (f1-f3)^2}]/(m(m+1)), N = sum_l n(l) l^2",
      };
    case ConnectionKind::kTanakaWebster:
      return {
          "m f1 g(X,Y) + {3 f2 + 2(f1-f3) + (f1-f3)^2} g(TX,TY) - {f3 + (f1-f3)^2}{g(X,Y) + "
          "(m-1) eta(X)eta(Y)}",
          "m f1 g(X,Y) + {3 f2 + 2(f1-f3) + (f1-f3)^2} g(TX,TY) - {f3 + (f1-f3)^2}{g(X,Y) + "
          "(m-1) eta(X)eta(Y)}",
          asi_tw,
          asi_tw,
          "sum_l ((m-1+3 l^2)c + 3(m-1+3 l^2))/4 g(U_l X, U_l Y) + 2m eta(X)eta(Y)",
          "sum_l ((m-1+3 l^2)c + 3(m-1+3 l^2))/4 g(U_l X, U_l Y)",
          "f1 + [{3 f2 + 2(f1-f3) + (f1-f3)^2} N - 2m{f3 + (f1-f3)^2}]/(m(m+1)), N = sum_l "
          "n(l) l^2",
          "f1 + [{3 f2 + 2(f1-f3) + (f1-f3)^2} N - 2m{f3 + (f1-f3)^2}]/(m(m+1)), N = sum_l "
          "n(l) l^2",
      };
    case ConnectionKind::kLeviCivita:
      break;
  }
  throw Error("no printed forms for this connection");
}

// h-free part of a Ricci closed form: the closed form minus its shape terms.
double ricci_constant_block(const Scenario& s, ConnectionKind kind,
                            const RicciForm& form, FormVariant variant) {
  const DistributionSplit split = asi_split(s.sub);
  const ShapeTerms t = shape_terms(s.sub, kind, s.params, s.x, s.y);
  const double m = s.sub.m();
  const double shape = variant == FormVariant::kAsPrinted
                           ? (m + 1) * t.trace_term - t.quadratic_adj
                           : t.trace_term - t.quadratic_sq;
  return ricci_closed(s.sub, kind, s.params, s.x, s.y, form, variant, &split) - shape;
}

std::vector<Block> blocks_for(ConnectionKind kind, const AlmostContactStructure& acs,
                              const Fixtures& f, std::span<const SpaceFormParams> grid) {
  const Expressions e = expressions(kind);
  const auto plain = random_scenarios(acs, grid, false, false);
  const auto minimal = random_scenarios(acs, grid, true, false);
  const auto sasakian = random_scenarios(acs, grid, false, true);
  const std::string general = citation(Formula::kRicciGeneral, kind);
  const std::string asi = citation(Formula::kRicciAsi, kind);
  const std::string also = "; same term in " + citation(Formula::kRicciAsi, kind) + ", " +
                           citation(Formula::kRicciSasakian, kind);

  std::vector<Block> out;
  out.push_back({general + ": constant block", e.general_printed, e.general_derived,
                 [kind](const Scenario& s) {
                   return Values{ricci_constant_block(s, kind, GeneralForm{}, FormVariant::kAsPrinted),
                                 ricci_constant_block(s, kind, GeneralForm{}, FormVariant::kOracleDerived)};
                 },
                 false, f.pinned, plain});
  out.push_back({general + ": trace factor" + also,
                 "sum_k (m+1)(trace A_k) g(A_k X, Y)", "sum_k (trace A_k) g(A_k X, Y)",
                 [kind](const Scenario& s) {
                   const ShapeTerms t = shape_terms(s.sub, kind, s.params, s.x, s.y);
                   return Values{(s.sub.m() + 1) * t.trace_term, t.trace_term};
                 },
                 false, f.trace, plain});
  out.push_back({general + ": quadratic shape term" + also + ", " +
                     citation(Formula::kSlackIdentity, kind),
                 "-sum_k g(A_k X, A_k Y)",
                 "-sum_k g(A_k^2 X, Y) (A_k is not self-adjoint when h~ is not symmetric)",
                 [kind](const Scenario& s) {
                   const ShapeTerms t = shape_terms(s.sub, kind, s.params, s.x, s.y);
                   return Values{-t.quadratic_adj, -t.quadratic_sq};
                 },
                 false, f.anti_flat, plain});
  out.push_back({asi + ": constant block", e.asi_printed, e.asi_derived,
                 [kind](const Scenario& s) {
                   return Values{ricci_constant_block(s, kind, AsiForm{}, FormVariant::kAsPrinted),
                                 ricci_constant_block(s, kind, AsiForm{}, FormVariant::kOracleDerived)};
                 },
                 false, f.pinned, plain});
  out.push_back({citation(Formula::kRicciSasakian, kind) + ": constant block",
                 e.sasakian_printed,
                 e.sasakian_derived,
                 [kind](const Scenario& s) {
                   return Values{ricci_constant_block(s, kind, SasakianForm{s.c},
                                                      FormVariant::kAsPrinted),
                                 ricci_constant_block(s, kind, SasakianForm{s.c},
                                                      FormVariant::kOracleDerived)};
                 },
                 false, f.sasakian, sasakian});
  out.push_back({citation(Formula::kScalar, kind) + ": constant block", e.scalar_printed,
                 e.scalar_derived,
                 [kind](const Scenario& s) {
                   const DistributionSplit split = asi_split(s.sub);
                   return Values{
                       theorem_scalar_bound(s.sub, kind, s.params, split, FormVariant::kAsPrinted),
                       theorem_scalar_bound(s.sub, kind, s.params, split,
                                            FormVariant::kOracleDerived)};
                 },
                 false, f.pinned, plain});

  const bool outside = kind == ConnectionKind::kSemisymmetricMetric ||
                       kind == ConnectionKind::kSemisymmetricNonMetric;
  out.push_back({citation(Formula::kScalar, kind) +
                     (outside ? ": bracket placement of the |H|^2, |h|^2 block (inside the "
                                "normalization in " +
                                    citation(Formula::kScalar, ConnectionKind::kSchoutenVanKampen) +
                                    " and " +
                                    citation(Formula::kScalar, ConnectionKind::kTanakaWebster) + ")"
                              : std::string(": norm of h~")),
                 outside ? "(m+1)^2 |H~|^2 - |h~|^2, outside the 1/(m(m+1)) factor"
                         : "[(m+1)^2 |H~|^2 - |h~|^2]/(m(m+1)), |h~|^2 = sum_ij |h~(E_i,E_j)|^2",
                 "[(m+1)^2 |H~|^2 - sum_k trace(A_k^2)]/(m(m+1))",
                 [kind, outside](const Scenario& s) {
                   const ScalarShapeTerms t = scalar_shape_terms(s.sub, kind, s.params);
                   const double norm = s.sub.m() * (s.sub.m() + 1.0);
                   const double printed = t.mean_sq - t.frobenius;
                   return Values{outside ? printed : printed / norm,
                                 (t.mean_sq - t.twisted) / norm};
                 },
                 false, f.bracket, plain});

  const std::string theorem_i = citation(Formula::kTheoremRicci, kind);
  const std::string theorem_ii = citation(Formula::kTheoremScalar, kind);
  for (FormVariant v : {FormVariant::kAsPrinted, FormVariant::kOracleDerived}) {
    const bool printed = v == FormVariant::kAsPrinted;
    const std::string suffix = printed ? "" : " with re-derived constants";
    out.push_back({theorem_i + suffix,
                   "S(X,X) <= " + (printed ? e.asi_printed : e.asi_derived) + " at Y = X",
                   "S(X,X) = " + e.asi_derived +
                       " at Y = X, minus sum_k g(A_k^2 X, X), which can be negative",
                   [kind, v](const Scenario& s) {
                     const DistributionSplit split = asi_split(s.sub);
                     return Values{theorem_ricci_bound(s.sub, kind, s.params, split, s.x, v),
                                   ricci_direct(s.sub, kind, s.params, s.x, s.x)};
                   },
                   true, f.theorem, minimal});
    out.push_back({theorem_ii + suffix,
                   "tau <= " + (printed ? e.scalar_printed : e.scalar_derived),
                   "tau = " + e.scalar_derived +
                       ", minus sum_k trace(A_k^2)/(m(m+1)), which can be negative",
                   [kind, v](const Scenario& s) {
                     const DistributionSplit split = asi_split(s.sub);
                     return Values{theorem_scalar_bound(s.sub, kind, s.params, split, v),
                                   scalar_direct(s.sub, kind, s.params)};
                   },
                   true, f.theorem, minimal});
  }
  return out;
}

bool shows_gap(const Values& v, bool bound, double tol) {
  if (bound) return v.derived - v.printed > tol;
  return std::abs(v.printed - v.derived) > tol;
}

bool is_minimal(const Scenario& s, ConnectionKind kind) {
  return classify_sff(s.sub, kind, s.params, kDefaultDropTol) != SffClass::kGeneric;
}

std::optional<ErrataEntry> search(const Block& block, ConnectionKind kind,
                                  const Sampler& sampler, int trials, double tol) {
  auto attempt = [&](const Scenario& s) -> std::optional<ErrataEntry> {
    if (block.bound && !is_minimal(s, kind)) return std::nullopt;
    const Values v = block.probe(s);
    if (!shows_gap(v, block.bound, tol)) return std::nullopt;
    return ErrataEntry{block.location, block.printed, block.derived,
                       {s.label, v.printed + 0.0, v.derived + 0.0}};  // drop -0
  };
  for (const Scenario& s : block.fixed) {
    if (auto entry = attempt(s)) return entry;
  }
  for (int t = 0; t < trials; ++t) {
    Sampler local = sampler.derive(static_cast<std::uint64_t>(t));
    if (auto entry = attempt(block.random(t, local))) return entry;
  }
  return std::nullopt;
}

std::optional<ErrataEntry> curvature_entry(ConnectionKind kind,
                                           const AlmostContactStructure& acs,
                                           std::span<const SpaceFormParams> grid,
                                           const Sampler& sampler, int trials,
                                           double tol) {
  for (int t = 0; t < trials; ++t) {
    Sampler s = sampler.derive(static_cast<std::uint64_t>(t));
    const SpaceFormParams p = grid[static_cast<size_t>(t) % grid.size()];
    const Vector x = s.unit_vector(acs.dim());
    const Vector y = s.unit_vector(acs.dim());
    const Vector z = s.unit_vector(acs.dim());
    const Vector closed = curvature_closed(kind, acs, p, x, y, z);
    const Vector oracle = curvature_oracle(kind, acs, p, x, y, z);
    const Vector r = closed - oracle;
    const double size = acs.metric().norm(r);
    if (size <= tol) continue;
    const Vector unit = r / size;
    return ErrataEntry{citation(Formula::kCurvature, kind), "closed-form curvature",
                       "R + (nabla_X D)(Y,Z) - (nabla_Y D)(X,Z) + D(X,D(Y,Z)) - D(Y,D(X,Z))",
                       {"random unit X, Y, Z (trial " + std::to_string(t) + "), params " + fmt(p) +
                            ", values along the residual direction",
                        acs.g(closed, unit), acs.g(oracle, unit)}};
  }
  return std::nullopt;
}

}  // namespace

std::vector<SpaceFormParams> default_param_grid() {
  return {{1.0, 0.0, 0.0},   {0.5, -0.25, 0.75}, {-1.0, 0.5, 0.25},
          {2.0, 1.0, -1.0},  {1.5, -0.5, 1.5},   {-0.75, 1.25, -1.5}};
}

std::vector<ErrataEntry> errata_report(const AlmostContactStructure& acs,
                                       const Sampler& sampler,
                                       std::span<const SpaceFormParams> param_grid,
                                       double tol, int search_trials) {
  if (param_grid.empty()) throw Error("errata report requires a non-empty parameter grid");
  const Fixtures fixtures = make_fixtures(acs);
  std::vector<ErrataEntry> entries;
  std::uint64_t stream = 0;
  for (ConnectionKind kind : kAllConnections) {
    if (auto entry = curvature_entry(kind, acs, param_grid, sampler.derive(stream++),
                                     search_trials, tol)) {
      entries.push_back(std::move(*entry));
    }
  }
  for (ConnectionKind kind : kDeformedConnections) {
    for (const Block& block : blocks_for(kind, acs, fixtures, param_grid)) {
      if (auto entry = search(block, kind, sampler.derive(stream++), search_trials, tol)) {
        entries.push_back(std::move(*entry));
      }
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ErrataEntry& a, const ErrataEntry& b) { return a.location < b.location; });
  return entries;
}

}  // namespace gssf
