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

#include "gssf/submanifolds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gssf {

Submanifold::Submanifold(AlmostContactStructure acs, std::vector<Vector> tangent,
                         std::vector<Vector> normal, SffCoefficients sff)
    : acs_(std::move(acs)),
      tangent_(std::move(tangent)),
      normal_(std::move(normal)),
      sff_(std::move(sff)) {}

void Submanifold::check_sff(const SffCoefficients& sff, Eigen::Index size,
                            Eigen::Index count) {
  if (static_cast<Eigen::Index>(sff.size()) != count) {
    std::ostringstream msg;
    msg << "second fundamental form needs " << count << " blocks, got "
        << sff.size();
    throw Error(msg.str());
  }
  for (const auto& block : sff) {
    if (block.rows() != size || block.cols() != size) {
      std::ostringstream msg;
      msg << "second fundamental form blocks must be " << size << "x" << size;
      throw Error(msg.str());
    }
    if (size > 0 && (block - block.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw Error("second fundamental form coefficients are not symmetric");
    }
  }
}

Submanifold Submanifold::build(const AlmostContactStructure& acs,
                               std::span<const Vector> spanning,
                               std::optional<SffCoefficients> sff) {
  if (spanning.empty()) throw Error("empty span");
  for (const Vector& v : spanning) acs.require_dim(v);
  const Metric& g = acs.metric();
  const Vector& xi = acs.xi();

  const std::vector<Vector> span_basis = orthonormalize(spanning, g);
  if (g.norm(xi - detail::project_unchecked(xi, span_basis, g)) > 1e-8) {
    throw Error("xi not tangent");
  }

  std::vector<Vector> horizontal;
  horizontal.reserve(spanning.size());
  for (const Vector& v : spanning) horizontal.push_back(v - acs.eta(v) * xi);
  std::vector<Vector> tangent;
  bool all_vertical = true;
  for (const Vector& v : horizontal) all_vertical = all_vertical && g.norm(v) < kDefaultDropTol;
  if (!all_vertical) tangent = orthonormalize(horizontal, g);
  tangent.push_back(xi);

  std::vector<Vector> completion = tangent;
  for (Eigen::Index i = 0; i < acs.dim(); ++i) completion.push_back(basis_vector(acs.dim(), i));
  const std::vector<Vector> full = orthonormalize(completion, g);
  std::vector<Vector> normal(full.begin() + static_cast<std::ptrdiff_t>(tangent.size()),
                             full.end());
  if (tangent.size() + normal.size() != static_cast<size_t>(acs.dim())) {
    throw Error("failed to complete the tangent frame to a basis");
  }

  const auto size = static_cast<Eigen::Index>(tangent.size());
  const auto count = static_cast<Eigen::Index>(normal.size());
  SffCoefficients coeffs;
  if (sff) {
    check_sff(*sff, size, count);
    coeffs = std::move(*sff);
  } else {
    coeffs.assign(static_cast<size_t>(count), Eigen::MatrixXd::Zero(size, size));
  }
  return Submanifold(acs, std::move(tangent), std::move(normal), std::move(coeffs));
}

Submanifold Submanifold::with_sff(SffCoefficients sff) const {
  check_sff(sff, static_cast<Eigen::Index>(tangent_.size()),
            static_cast<Eigen::Index>(normal_.size()));
  return Submanifold(acs_, tangent_, normal_, std::move(sff));
}

bool Submanifold::is_tangent(const Vector& x, double tol) const {
  if (x.size() != acs_.dim()) return false;
  const Vector inside = detail::project_unchecked(x, tangent_, acs_.metric());
  return acs_.metric().norm(x - inside) <= tol;
}

Eigen::VectorXd Submanifold::tangent_coords(const Vector& x) const {
  acs_.require_dim(x);
  if (!is_tangent(x)) throw Error("vector is not tangent to the submanifold");
  Eigen::VectorXd coords(static_cast<Eigen::Index>(tangent_.size()));
  for (size_t i = 0; i < tangent_.size(); ++i) {
    coords(static_cast<Eigen::Index>(i)) = acs_.g(x, tangent_[i]);
  }
  return coords;
}

Eigen::VectorXd Submanifold::normal_coords(const Vector& v) const {
  acs_.require_dim(v);
  Eigen::VectorXd coords(static_cast<Eigen::Index>(normal_.size()));
  for (size_t k = 0; k < normal_.size(); ++k) {
    coords(static_cast<Eigen::Index>(k)) = acs_.g(v, normal_[k]);
  }
  return coords;
}

Vector Submanifold::from_normal_coords(const Eigen::VectorXd& coords) const {
  Vector out = Vector::Zero(acs_.dim());
  for (size_t k = 0; k < normal_.size(); ++k) {
    out += coords(static_cast<Eigen::Index>(k)) * normal_[k];
  }
  return out;
}

Vector Submanifold::sff_value(const Vector& x, const Vector& y) const {
  const Eigen::VectorXd a = tangent_coords(x);
  const Eigen::VectorXd b = tangent_coords(y);
  Eigen::VectorXd coords(static_cast<Eigen::Index>(normal_.size()));
  for (size_t k = 0; k < sff_.size(); ++k) {
    coords(static_cast<Eigen::Index>(k)) = a.dot(sff_[k] * b);
  }
  return from_normal_coords(coords);
}

Vector Submanifold::t_part(const Vector& x) const {
  return tf_split(acs_, tangent_, x).tangential;
}

Vector Submanifold::f_part(const Vector& x) const {
  return tf_split(acs_, tangent_, x).normal;
}

Operator shape_operator(const Submanifold& sub, int k) {
  if (k < 0 || k >= sub.codim()) throw Error("normal index out of range");
  const auto& frame = sub.tangent_frame();
  const Eigen::MatrixXd& block = sub.sff()[static_cast<size_t>(k)];
  const Eigen::MatrixXd& gm = sub.structure().metric().entries();
  const Eigen::Index d = sub.structure().dim();
  // A X = sum_ij h_k(E_i, E_j) g(X, E_i) E_j.
  Operator a = Operator::Zero(d, d);
  for (size_t i = 0; i < frame.size(); ++i) {
    const Eigen::RowVectorXd covector = (gm * frame[i]).transpose();
    for (size_t j = 0; j < frame.size(); ++j) {
      a += block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
           frame[j] * covector;
    }
  }
  return a;
}

Vector deformed_sff(const Submanifold& sub, ConnectionKind kind,
                    const SpaceFormParams& params, const Vector& x,
                    const Vector& y) {
  Vector out = sub.sff_value(x, y);
  if (kind == ConnectionKind::kLeviCivita) return out;
  const Vector d = deformation(kind, sub.structure(), params, x, y);
  out += sub.from_normal_coords(sub.normal_coords(d));
  return out;
}

SffCoefficients deformed_sff_blocks(const Submanifold& sub, ConnectionKind kind,
                                    const SpaceFormParams& params) {
  const auto& frame = sub.tangent_frame();
  const auto size = static_cast<Eigen::Index>(frame.size());
  SffCoefficients blocks(static_cast<size_t>(sub.codim()),
                         Eigen::MatrixXd::Zero(size, size));
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const Eigen::VectorXd coords = sub.normal_coords(deformed_sff(
          sub, kind, params, frame[static_cast<size_t>(i)], frame[static_cast<size_t>(j)]));
      for (size_t k = 0; k < blocks.size(); ++k) {
        blocks[k](i, j) = coords(static_cast<Eigen::Index>(k));
      }
    }
  }
  return blocks;
}

Vector mean_curvature(const Submanifold& sub, ConnectionKind kind,
                      const SpaceFormParams& params) {
  Vector sum = Vector::Zero(sub.structure().dim());
  for (const Vector& e : sub.tangent_frame()) sum += deformed_sff(sub, kind, params, e, e);
  return sum / static_cast<double>(sub.tangent_frame().size());
}

std::string_view to_string(SffClass c) {
  switch (c) {
    case SffClass::kTotallyGeodesic: return "totally_geodesic";
    case SffClass::kMinimal: return "minimal";
    case SffClass::kGeneric: return "generic";
  }
  return "unknown";
}

SffClass classify_sff(const Submanifold& sub, ConnectionKind kind,
                      const SpaceFormParams& params, double tol) {
  const Metric& g = sub.structure().metric();
  bool geodesic = true;
  for (const Vector& ei : sub.tangent_frame()) {
    for (const Vector& ej : sub.tangent_frame()) {
      if (g.norm(deformed_sff(sub, kind, params, ei, ej)) > tol) geodesic = false;
    }
  }
  if (geodesic) return SffClass::kTotallyGeodesic;
  if (g.norm(mean_curvature(sub, kind, params)) <= tol) return SffClass::kMinimal;
  return SffClass::kGeneric;
}

double induced_curvature(const Submanifold& sub, ConnectionKind kind,
                         const SpaceFormParams& params, const Vector& x,
                         const Vector& y, const Vector& z, const Vector& w) {
  for (const Vector* v : {&x, &y, &z, &w}) {
    if (!sub.is_tangent(*v)) throw Error("vector is not tangent to the submanifold");
  }
  const AlmostContactStructure& acs = sub.structure();
  const double ambient = acs.g(curvature_closed(kind, acs, params, x, y, z), w);
  return ambient +
         acs.g(deformed_sff(sub, kind, params, x, w), deformed_sff(sub, kind, params, y, z)) -
         acs.g(deformed_sff(sub, kind, params, x, z), deformed_sff(sub, kind, params, y, w));
}

std::string_view to_string(DistributionType type) {
  switch (type) {
    case DistributionType::kInvariant: return "invariant";
    case DistributionType::kAntiInvariant: return "anti_invariant";
    case DistributionType::kSlant: return "slant";
  }
  return "unknown";
}

Vector DistributionSplit::project(size_t index, const Vector& x,
                                  const Metric& g) const {
  return detail::project_unchecked(x, clusters.at(index).basis, g);
}

double DistributionSplit::weighted_lambda_squares() const {
  double out = 0.0;
  for (const auto& c : clusters) out += c.multiplicity * c.lambda * c.lambda;
  return out;
}

int DistributionSplit::total_multiplicity() const {
  int out = 0;
  for (const auto& c : clusters) out += c.multiplicity;
  return out;
}

DistributionSplit asi_split(const Submanifold& sub, double tol) {
  const AlmostContactStructure& acs = sub.structure();
  const Eigen::MatrixXd& gm = acs.metric().entries();
  const Eigen::Index d = acs.dim();
  Operator tangent_projection = Operator::Zero(d, d);
  for (const Vector& e : sub.tangent_frame()) {
    tangent_projection += e * (gm * e).transpose();
  }
  const Operator t = tangent_projection * acs.phi() * tangent_projection;
  const Operator minus_t_squared = -(t * t);

  DistributionSplit split;
  for (auto& cluster : symmetric_spectrum(minus_t_squared, sub.distribution_frame(),
                                          acs.metric(), tol)) {
    const double mu = std::clamp(cluster.eigenvalue, 0.0, 1.0);
    DistributionCluster out;
    out.lambda = std::sqrt(mu);
    out.multiplicity = static_cast<int>(cluster.eigenvectors.size());
    out.basis = std::move(cluster.eigenvectors);
    if (std::abs(cluster.eigenvalue - 1.0) <= tol) {
      out.type = DistributionType::kInvariant;
    } else if (std::abs(cluster.eigenvalue) <= tol) {
      out.type = DistributionType::kAntiInvariant;
    } else {
      out.type = DistributionType::kSlant;
    }
    split.clusters.push_back(std::move(out));
  }
  return split;
}

Vector random_tangent(const Submanifold& sub, Sampler& sampler) {
  const Vector coords =
      sampler.unit_vector(static_cast<Eigen::Index>(sub.tangent_frame().size()));
  Vector out = Vector::Zero(sub.structure().dim());
  for (size_t i = 0; i < sub.tangent_frame().size(); ++i) {
    out += coords(static_cast<Eigen::Index>(i)) * sub.tangent_frame()[i];
  }
  return out;
}

SlantIdentityReport verify_slant_identity(const Submanifold& sub,
                                          const DistributionSplit& split,
                                          Sampler& sampler, int trials,
                                          double tol) {
  const Metric& g = sub.structure().metric();
  SlantIdentityReport report;
  report.trials = trials;
  report.tol = tol;
  for (int t = 0; t < trials; ++t) {
    const Vector x = random_tangent(sub, sampler);
    const Vector y = random_tangent(sub, sampler);
    double rhs = 0.0;
    for (size_t c = 0; c < split.clusters.size(); ++c) {
      const double lambda = split.clusters[c].lambda;
      rhs += lambda * lambda * g.inner(split.project(c, x, g), split.project(c, y, g));
    }
    const double lhs = g.inner(sub.t_part(x), sub.t_part(y));
    report.max_residual = std::max(report.max_residual, std::abs(lhs - rhs));
  }
  report.pass = report.max_residual <= tol;
  return report;
}

SffCoefficients random_sff(const Submanifold& sub, Sampler& sampler) {
  return sampler.symmetric_coeffs(static_cast<Eigen::Index>(sub.tangent_frame().size()),
                                  sub.codim());
}

SffCoefficients random_minimal_sff(const Submanifold& sub, Sampler& sampler) {
  SffCoefficients blocks = random_sff(sub, sampler);
  for (auto& block : blocks) {
    const double shift = block.trace() / static_cast<double>(block.rows());
    block.diagonal().array() -= shift;
  }
  return blocks;
}

Submanifold random_submanifold(const AlmostContactStructure& acs, int m,
                               Sampler& sampler) {
  if (m < 1 || m > 2 * acs.n() - 1) {
    throw Error("random_submanifold requires 1 <= m <= 2n - 1");
  }
  const Vector& xi = acs.xi();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vector> draws;
    for (int i = 0; i < m; ++i) {
      Vector v = sampler.unit_vector(acs.dim());
      draws.push_back(v - acs.eta(v) * xi);
    }
    std::vector<Vector> basis = orthonormalize(draws, acs.metric(), 1e-6);
    if (static_cast<int>(basis.size()) != m) continue;
    basis.push_back(xi);
    return Submanifold::build(acs, basis);
  }
  throw Error("could not draw a full-rank tangent span");
}

}  // namespace gssf
