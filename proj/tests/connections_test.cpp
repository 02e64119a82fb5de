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


#include <vector>

#include <gtest/gtest.h>

#include "gssf/connections.hpp"
#include "support/fixtures.hpp"
#include "support/index_oracle.hpp"

namespace gssf {
namespace {

using gssf_test::Tensor3;
using gssf_test::Tensor4;

SpaceFormParams random_params(Sampler& s) {
  return {s.scalar(-2, 2), s.scalar(-2, 2), s.scalar(-2, 2)};
}

Vector apply3(const Tensor3& t, const Vector& x, const Vector& y) {
  Vector out = Vector::Zero(t.dim());
  for (int a = 0; a < t.dim(); ++a)
    for (int b = 0; b < t.dim(); ++b)
      for (int c = 0; c < t.dim(); ++c) out(c) += t(a, b, c) * x(a) * y(b);
  return out;
}

Vector apply4(const Tensor4& t, const Vector& x, const Vector& y, const Vector& z) {
  Vector out = Vector::Zero(t.dim());
  for (int a = 0; a < t.dim(); ++a)
    for (int b = 0; b < t.dim(); ++b)
      for (int c = 0; c < t.dim(); ++c)
        for (int e = 0; e < t.dim(); ++e) out(e) += t(a, b, c, e) * x(a) * y(b) * z(c);
  return out;
}

class PerKind : public ::testing::TestWithParam<ConnectionKind> {};

TEST_P(PerKind, DeformationMatchesIndexOracle) {
  const ConnectionKind kind = GetParam();
  const AlmostContactStructure acs = canonical_structure(3);
  const gssf_test::Structure s = gssf_test::standard_structure(3);
  Sampler sampler(21);
  for (int t = 0; t < 50; ++t) {
    const SpaceFormParams p = random_params(sampler);
    const Vector x = sampler.unit_vector(7), y = sampler.unit_vector(7);
    const Tensor3 d = gssf_test::deformation(kind, s.xi, s.phi, p.psi());
    EXPECT_LE((deformation(kind, acs, p, x, y) - apply3(d, x, y)).norm(), 1e-13);
  }
}

TEST_P(PerKind, DeformationDerivativeMatchesIndexOracle) {
  const ConnectionKind kind = GetParam();
  const AlmostContactStructure acs = canonical_structure(2);
  const gssf_test::Structure s = gssf_test::standard_structure(2);
  Sampler sampler(22);
  for (int t = 0; t < 10; ++t) {
    const SpaceFormParams p = random_params(sampler);
    const Tensor4 nd = gssf_test::deformation_derivative(kind, s, gssf_test::to_params(p));
    const Vector x = sampler.unit_vector(5), y = sampler.unit_vector(5), z = sampler.unit_vector(5);
    EXPECT_LE((deformation_derivative(kind, acs, p, x, y, z) - apply4(nd, x, y, z)).norm(),
              1e-12);
  }
}

TEST_P(PerKind, ClosedCurvatureMatchesIndexOracle) {
  const ConnectionKind kind = GetParam();
  Sampler sampler(23);
  for (int n : {1, 2, 3}) {
    const AlmostContactStructure acs = canonical_structure(n);
    const gssf_test::Structure s = gssf_test::standard_structure(n);
    for (int t = 0; t < 5; ++t) {
      const SpaceFormParams p = random_params(sampler);
      const Tensor4 r = gssf_test::connection_curvature(kind, s, gssf_test::to_params(p));
      for (int u = 0; u < 10; ++u) {
        const Vector x = sampler.unit_vector(s.d), y = sampler.unit_vector(s.d),
                     z = sampler.unit_vector(s.d);
        const Vector expected = apply4(r, x, y, z);
        EXPECT_LE((curvature_closed(kind, acs, p, x, y, z) - expected).norm(), 1e-11);
        EXPECT_LE((curvature_oracle(kind, acs, p, x, y, z) - expected).norm(), 1e-11);
      }
    }
  }
}

TEST_P(PerKind, CurvatureIsSkewInFirstPair) {
  const ConnectionKind kind = GetParam();
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler sampler(24);
  for (int t = 0; t < 100; ++t) {
    const SpaceFormParams p = random_params(sampler);
    const Vector x = sampler.unit_vector(7), y = sampler.unit_vector(7), z = sampler.unit_vector(7);
    EXPECT_LE((curvature_oracle(kind, acs, p, x, y, z) + curvature_oracle(kind, acs, p, y, x, z))
                  .norm(),
              1e-12);
  }
}

TEST_P(PerKind, ClosedTermsSumToClosedForm) {
  const ConnectionKind kind = GetParam();
  const AlmostContactStructure acs = canonical_structure(2);
  Sampler sampler(25);
  const SpaceFormParams p = random_params(sampler);
  const Vector x = sampler.unit_vector(5), y = sampler.unit_vector(5), z = sampler.unit_vector(5);
  Vector sum = Vector::Zero(5);
  for (const CurvatureTerm& term : curvature_closed_terms(kind, acs, p, x, y, z)) {
    EXPECT_FALSE(term.label.empty());
    sum += term.value;
  }
  EXPECT_LE((sum - curvature_closed(kind, acs, p, x, y, z)).norm(), 1e-14);
}

TEST_P(PerKind, CompareCurvatureMatchesAndIgnoresThreads) {
  const ConnectionKind kind = GetParam();
  const AlmostContactStructure acs = canonical_structure(3);
  const Sampler sampler(26);
  const ComparisonReport one = compare_curvature(kind, acs, sampler, 200, RandomParams{}, 1e-9, 1);
  const ComparisonReport three =
      compare_curvature(kind, acs, sampler, 200, RandomParams{}, 1e-9, 3);
  EXPECT_TRUE(one.match);
  EXPECT_FALSE(one.witness.has_value());
  EXPECT_LE(one.max_residual, 1e-9);
  EXPECT_EQ(one.max_residual, three.max_residual);
}

TEST_P(PerKind, NameRoundTrip) {
  const ConnectionKind kind = GetParam();
  EXPECT_EQ(parse_connection_kind(to_string(kind)), kind);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, PerKind, ::testing::ValuesIn(kAllConnections),
                         [](const ::testing::TestParamInfo<ConnectionKind>& info) {
                           std::string name(to_string(info.param));
                           std::erase(name, '_');
                           return name;
                         });

TEST(ConnectionsTest, UnknownNameIsRejected) {
  EXPECT_FALSE(parse_connection_kind("tanaka").has_value());
}

TEST(ConnectionsTest, LeviCivitaCurvatureIsTheSpaceForm) {
  const AlmostContactStructure acs = canonical_structure(2);
  Sampler s(27);
  for (int t = 0; t < 20; ++t) {
    const SpaceFormParams p = random_params(s);
    const Vector x = s.unit_vector(5), y = s.unit_vector(5), z = s.unit_vector(5);
    EXPECT_LE((curvature_closed(ConnectionKind::kLeviCivita, acs, p, x, y, z) -
               gssf_curvature(acs, p, x, y, z))
                  .norm(),
              1e-14);
  }
}

// g(D(X,Y),Z) + g(Y,D(X,Z)) vanishes exactly for the metric deformations.
TEST(ConnectionsTest, MetricCompatibility) {
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler s(28);
  for (int t = 0; t < 100; ++t) {
    const SpaceFormParams p = random_params(s);
    const Vector x = s.unit_vector(7), y = s.unit_vector(7), z = s.unit_vector(7);
    for (ConnectionKind kind : {ConnectionKind::kSemisymmetricMetric,
                                ConnectionKind::kSchoutenVanKampen, ConnectionKind::kTanakaWebster}) {
      EXPECT_NEAR(acs.g(deformation(kind, acs, p, x, y), z) + acs.g(y, deformation(kind, acs, p, x, z)),
                  0.0, 1e-13);
    }
    // Non-metric: (nabla~_X g)(Y,Z) = -eta(Y) g(X,Z) - eta(Z) g(X,Y).
    const ConnectionKind nm = ConnectionKind::kSemisymmetricNonMetric;
    const double q = -acs.g(deformation(nm, acs, p, x, y), z) - acs.g(y, deformation(nm, acs, p, x, z));
    EXPECT_NEAR(q, -acs.eta(y) * acs.g(x, z) - acs.eta(z) * acs.g(x, y), 1e-13);
  }
}

TEST(ConnectionsTest, SemisymmetricTorsion) {
  const AlmostContactStructure acs = canonical_structure(2);
  Sampler s(29);
  const SpaceFormParams p{1, 0, 0};
  for (int t = 0; t < 50; ++t) {
    const Vector x = s.unit_vector(5), y = s.unit_vector(5);
    const Vector expected = acs.eta(y) * x - acs.eta(x) * y;
    for (ConnectionKind kind :
         {ConnectionKind::kSemisymmetricMetric, ConnectionKind::kSemisymmetricNonMetric}) {
      const Vector torsion = deformation(kind, acs, p, x, y) - deformation(kind, acs, p, y, x);
      EXPECT_LE((torsion - expected).norm(), 1e-14);
    }
  }
}

// The structure tensors are parallel for the two phi-valued deformations.
TEST(ConnectionsTest, StructureParallelForSchoutenAndTanaka) {
  const AlmostContactStructure acs = canonical_structure(3);
  Sampler s(30);
  for (int t = 0; t < 100; ++t) {
    const SpaceFormParams p = random_params(s);
    const Vector x = s.unit_vector(7), y = s.unit_vector(7);
    for (ConnectionKind kind : {ConnectionKind::kSchoutenVanKampen, ConnectionKind::kTanakaWebster}) {
      const Vector dxi = structure_derivative_xi(acs, p, x) + deformation(kind, acs, p, x, acs.xi());
      EXPECT_LE(dxi.norm(), 1e-13);
      const Vector dphi = structure_derivative_phi(acs, p, x, y) +
                          deformation(kind, acs, p, x, acs.apply_phi(y)) -
                          acs.apply_phi(deformation(kind, acs, p, x, y));
      EXPECT_LE(dphi.norm(), 1e-13);
    }
  }
}

TEST(ConnectionsTest, StructureDerivativesAreConsistent) {
  const AlmostContactStructure acs = canonical_structure(2);
  Sampler s(31);
  const SpaceFormParams p = random_params(s);
  const Vector x = s.unit_vector(5), y = s.unit_vector(5);
  // Differentiating phi xi = 0: (nabla_X phi) xi + phi nabla_X xi = 0.
  EXPECT_LE((structure_derivative_phi(acs, p, x, acs.xi()) +
             acs.apply_phi(structure_derivative_xi(acs, p, x)))
                .norm(),
            1e-14);
  EXPECT_NEAR(structure_derivative_eta(acs, p, x, y),
              acs.g(structure_derivative_xi(acs, p, x), y), 1e-15);
}

}  // namespace
}  // namespace gssf
