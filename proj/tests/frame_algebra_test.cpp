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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gssf/frame_algebra.hpp"
#include "gssf/sampler.hpp"

namespace gssf {
namespace {

TEST(MetricTest, RejectsAsymmetricAndIndefinite) {
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.5, 0.0, 1.0;
  EXPECT_THROW(Metric{asym}, Error);
  Eigen::MatrixXd indef(2, 2);
  indef << 1.0, 0.0, 0.0, -1.0;
  EXPECT_THROW(Metric{indef}, Error);
}

TEST(MetricTest, InnerUsesEntries) {
  Eigen::MatrixXd g(2, 2);
  g << 2.0, 0.5, 0.5, 1.0;
  const Metric metric(g);
  Vector x(2), y(2);
  x << 1.0, 2.0;
  y << -1.0, 3.0;
  EXPECT_DOUBLE_EQ(metric.inner(x, y), x.dot(g * y));
  EXPECT_DOUBLE_EQ(metric.norm(x), std::sqrt(x.dot(g * x)));
}

TEST(OrthonormalizeTest, DropsDependentVectorsAndKeepsOrder) {
  const Metric g = Metric::identity(4);
  const std::vector<Vector> in = {basis_vector(4, 0) * 3.0, basis_vector(4, 0) * -2.0,
                                  basis_vector(4, 0) + basis_vector(4, 2)};
  const std::vector<Vector> out = orthonormalize(in, g);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_LE((out[0] - basis_vector(4, 0)).norm(), 1e-15);
  EXPECT_LE((out[1] - basis_vector(4, 2)).norm(), 1e-15);
  EXPECT_LE(orthonormality_defect(out, g), 1e-15);
}

TEST(OrthonormalizeTest, EmptyInputThrows) {
  const Metric g = Metric::identity(3);
  EXPECT_THROW(orthonormalize(std::vector<Vector>{}, g), Error);
}

TEST(OrthonormalizeTest, RandomSpansUnderNonIdentityMetric) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(5, 5);
  a(0, 1) = a(1, 0) = 0.3;
  a(2, 4) = a(4, 2) = -0.2;
  const Metric g(a);
  Sampler sampler(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vector> in;
    for (int i = 0; i < 3; ++i) in.push_back(sampler.unit_vector(5));
    const std::vector<Vector> out = orthonormalize(in, g);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_LE(orthonormality_defect(out, g), 1e-12);
    // Same span: every input projects onto itself.
    for (const Vector& v : in) EXPECT_LE((project(v, out, g) - v).norm(), 1e-12);
  }
}

TEST(ProjectTest, RequiresOrthonormalBasis) {
  const Metric g = Metric::identity(3);
  const std::vector<Vector> bad = {basis_vector(3, 0) * 2.0};
  EXPECT_THROW(project(basis_vector(3, 0), bad, g), Error);
  const std::vector<Vector> good = {basis_vector(3, 0)};
  Vector v(3);
  v << 1.0, 2.0, 3.0;
  EXPECT_LE((project(v, good, g) - basis_vector(3, 0)).norm(), 1e-15);
}

TEST(SymmetricSpectrumTest, ClustersRepeatedEigenvaluesInDescendingOrder) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a.diagonal() << 0.25, 1.0, 0.25, 1.0;
  const Metric g = Metric::identity(4);
  std::vector<Vector> basis;
  for (int i = 0; i < 4; ++i) basis.push_back(basis_vector(4, i));
  const std::vector<EigenCluster> c = symmetric_spectrum(a, basis, g);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].eigenvalue, 1.0, 1e-14);
  EXPECT_NEAR(c[1].eigenvalue, 0.25, 1e-14);
  EXPECT_EQ(c[0].eigenvectors.size(), 2u);
  EXPECT_EQ(c[1].eigenvectors.size(), 2u);
  for (const EigenCluster& cluster : c) {
    for (const Vector& v : cluster.eigenvectors) {
      EXPECT_LE((a * v - cluster.eigenvalue * v).norm(), 1e-13);
    }
  }
}

TEST(SymmetricSpectrumTest, RestrictsToInvariantSubspace) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 0) = 2.0;
  a(1, 1) = 3.0;
  a(2, 2) = 5.0;
  const Metric g = Metric::identity(3);
  const std::vector<Vector> basis = {basis_vector(3, 0), basis_vector(3, 2)};
  const std::vector<EigenCluster> c = symmetric_spectrum(a, basis, g);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].eigenvalue, 5.0, 1e-14);
  EXPECT_NEAR(c[1].eigenvalue, 2.0, 1e-14);
}

TEST(SymmetricSpectrumTest, ThrowsWhenSpanIsNotInvariant) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = a(1, 0) = 1.0;
  const Metric g = Metric::identity(2);
  const std::vector<Vector> basis = {basis_vector(2, 0)};
  EXPECT_THROW(symmetric_spectrum(a, basis, g), Error);
}

TEST(SymmetricSpectrumTest, ThrowsWhenNotSelfAdjoint) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 1) = 1.0;
  const Metric g = Metric::identity(2);
  const std::vector<Vector> basis = {basis_vector(2, 0), basis_vector(2, 1)};
  EXPECT_THROW(symmetric_spectrum(a, basis, g), Error);
}

TEST(SamplerTest, DeterministicAndDeriveDoesNotAdvance) {
  Sampler a(42), b(42);
  const Sampler child = a.derive(3);
  EXPECT_EQ(a.counter(), 0u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.scalar(-1.0, 1.0), b.scalar(-1.0, 1.0));
  Sampler c1 = a.derive(3), c2 = child;
  EXPECT_EQ(c1.gaussian(), c2.gaussian());
  Sampler other = a.derive(4);
  Sampler same = a.derive(3);
  EXPECT_NE(other.scalar(0.0, 1.0), same.scalar(0.0, 1.0));
}

TEST(SamplerTest, UnitVectorsAndScalarRange) {
  Sampler s(1);
  for (int i = 0; i < 200; ++i) {
    EXPECT_NEAR(s.unit_vector(7).norm(), 1.0, 1e-14);
    const double x = s.scalar(-2.0, 2.0);
    EXPECT_GE(x, -2.0);
    EXPECT_LE(x, 2.0);
  }
  EXPECT_THROW(s.scalar(1.0, 1.0), Error);
}

TEST(SamplerTest, SymmetricCoefficients) {
  Sampler s(5);
  for (const Eigen::MatrixXd& m : s.symmetric_coeffs(4, 3)) {
    EXPECT_EQ(m, m.transpose());
    EXPECT_LE(m.cwiseAbs().maxCoeff(), 1.0);
  }
}

TEST(SamplerTest, RunTrialsIndependentOfThreadCount) {
  const Sampler root(99);
  const std::function<double(int, Sampler&)> fn = [](int t, Sampler& s) {
    return t + s.gaussian();
  };
  const std::vector<double> one = run_trials(root, 40, 1, fn);
  const std::vector<double> four = run_trials(root, 40, 4, fn);
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace gssf
