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


#include "index_oracle.hpp"

namespace gssf_test {

using gssf::ConnectionKind;

Structure standard_structure(int n) {
  Structure s;
  s.n = n;
  s.d = 2 * n + 1;
  s.phi = Eigen::MatrixXd::Zero(s.d, s.d);
  for (int i = 0; i < n; ++i) {
    s.phi(n + i, i) = 1.0;
    s.phi(i, n + i) = -1.0;
  }
  s.xi = Eigen::VectorXd::Zero(s.d);
  s.xi(s.d - 1) = 1.0;
  return s;
}

Tensor4 space_form_curvature(const Structure& s, const Params& p) {
  const int d = s.d;
  const auto& phi = s.phi;
  const auto& xi = s.xi;
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  // g(e_a, phi e_c) = phi(a, c).
  Tensor4 r(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          const double t1 = delta(b, c) * delta(a, e) - delta(a, c) * delta(b, e);
          const double t2 = phi(a, c) * phi(e, b) - phi(b, c) * phi(e, a) +
                            2.0 * phi(a, b) * phi(e, c);
          const double t3 = xi(a) * xi(c) * delta(b, e) - xi(b) * xi(c) * delta(a, e) +
                            delta(a, c) * xi(b) * xi(e) - delta(b, c) * xi(a) * xi(e);
          r(a, b, c, e) = p.f1 * t1 + p.f2 * t2 + p.f3 * t3;
        }
  return r;
}

Tensor3 deformation(ConnectionKind kind, const Eigen::VectorXd& xi, const Eigen::MatrixXd& phi,
                    double psi) {
  const int d = static_cast<int>(xi.size());
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  Tensor3 t(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        double v = 0.0;
        switch (kind) {
          case ConnectionKind::kLeviCivita:
            break;
          case ConnectionKind::kSemisymmetricMetric:
            v = xi(b) * delta(a, c) - delta(a, b) * xi(c);
            break;
          case ConnectionKind::kSemisymmetricNonMetric:
            v = xi(b) * delta(a, c);
            break;
          case ConnectionKind::kTanakaWebster:
            v = xi(a) * phi(c, b);
            [[fallthrough]];
          case ConnectionKind::kSchoutenVanKampen:
            v += psi * (xi(b) * phi(c, a) - phi(b, a) * xi(c));
            break;
        }
        t(a, b, c) = v;
      }
  return t;
}

Tensor4 deformation_derivative(ConnectionKind kind, const Structure& s, const Params& p) {
  const int d = s.d;
  const double psi = p.psi();
  Tensor4 out(d);
  for (int e = 0; e < d; ++e) {
    // nabla_{e_e} xi = -psi phi e_e; (nabla_{e_e} phi) e_b = psi (delta_eb xi - xi_b e_e).
    const Eigen::VectorXd dxi = -psi * s.phi.col(e);
    Eigen::MatrixXd dphi = Eigen::MatrixXd::Zero(d, d);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        dphi(c, b) = psi * ((e == b ? s.xi(c) : 0.0) - s.xi(b) * (c == e ? 1.0 : 0.0));
    const Tensor3 plus = deformation(kind, s.xi + dxi, s.phi + dphi, psi);
    const Tensor3 minus = deformation(kind, s.xi - dxi, s.phi - dphi, psi);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) out(e, a, b, c) = 0.5 * (plus(a, b, c) - minus(a, b, c));
  }
  return out;
}

Tensor4 connection_curvature(ConnectionKind kind, const Structure& s, const Params& p) {
  const int d = s.d;
  Tensor4 r = space_form_curvature(s, p);
  if (kind == ConnectionKind::kLeviCivita) return r;
  const Tensor3 dd = deformation(kind, s.xi, s.phi, p.psi());
  const Tensor4 nd = deformation_derivative(kind, s, p);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          double v = nd(a, b, c, e) - nd(b, a, c, e);
          for (int q = 0; q < d; ++q) v += dd(b, c, q) * dd(a, q, e) - dd(a, c, q) * dd(b, q, e);
          r(a, b, c, e) += v;
        }
  return r;
}

std::vector<Eigen::MatrixXd> deformed_blocks(ConnectionKind kind, const Structure& s,
                                             const Params& p, const Frames& f) {
  const int d = s.d;
  const auto t = static_cast<int>(f.tangent.cols());
  const Tensor3 dd = deformation(kind, s.xi, s.phi, p.psi());
  std::vector<Eigen::MatrixXd> out = f.h;
  for (size_t k = 0; k < out.size(); ++k) {
    const Eigen::VectorXd nk = f.normal.col(static_cast<Eigen::Index>(k));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        double v = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
              v += dd(a, b, c) * f.tangent(a, i) * f.tangent(b, j) * nk(c);
        out[k](i, j) += v;
      }
  }
  return out;
}

Tensor4 induced_curvature(ConnectionKind kind, const Structure& s, const Params& p,
                          const Frames& f) {
  const int d = s.d;
  const auto t = static_cast<int>(f.tangent.cols());
  const Tensor4 amb = connection_curvature(kind, s, p);
  const Eigen::MatrixXd& e = f.tangent;
  // Contract one slot at a time.
  Tensor4 step1(d), step2(d), step3(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int l = 0; l < t; ++l) {
          double v = 0.0;
          for (int q = 0; q < d; ++q) v += amb(a, b, c, q) * e(q, l);
          step1(a, b, c, l) = v;
        }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int k = 0; k < t; ++k)
        for (int l = 0; l < t; ++l) {
          double v = 0.0;
          for (int q = 0; q < d; ++q) v += step1(a, b, q, l) * e(q, k);
          step2(a, b, k, l) = v;
        }
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < t; ++k)
        for (int l = 0; l < t; ++l) {
          double v = 0.0;
          for (int q = 0; q < d; ++q) v += step2(a, q, k, l) * e(q, j);
          step3(a, j, k, l) = v;
        }
  const std::vector<Eigen::MatrixXd> hd = deformed_blocks(kind, s, p, f);
  Tensor4 r(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < t; ++k)
        for (int l = 0; l < t; ++l) {
          double v = 0.0;
          for (int q = 0; q < d; ++q) v += step3(q, j, k, l) * e(q, i);
          for (const Eigen::MatrixXd& m : hd) v += m(i, l) * m(j, k) - m(i, k) * m(j, l);
          r(i, j, k, l) = v;
        }
  return r;
}

Eigen::MatrixXd ricci_matrix(const Tensor4& r, bool last_first) {
  const int t = r.dim();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(t, t);
  for (int x = 0; x < t; ++x)
    for (int y = 0; y < t; ++y)
      for (int i = 0; i < t; ++i) s(x, y) += last_first ? r(x, i, i, y) : r(i, x, y, i);
  return s;
}

double scalar(const Tensor4& r) {
  const int t = r.dim();
  const int m = t - 1;
  double sum = 0.0;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) sum += r(i, j, j, i);
  return sum / (m * (m + 1.0));
}

}  // namespace gssf_test
