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


// Hand-built configurations and adapters shared by the test binaries.

#ifndef GSSF_TESTS_SUPPORT_FIXTURES_HPP_
#define GSSF_TESTS_SUPPORT_FIXTURES_HPP_

#include <cmath>
#include <vector>

#include "gssf/contact_geometry.hpp"
#include "gssf/submanifolds.hpp"
#include "index_oracle.hpp"

namespace gssf_test {

inline gssf::Vector e(const gssf::AlmostContactStructure& acs, int one_based) {
  return gssf::basis_vector(acs.dim(), one_based - 1);
}

// span{e1, phi e1, xi}: invariant, lambda = 1.
inline gssf::Submanifold invariant_sub(const gssf::AlmostContactStructure& acs) {
  const std::vector<gssf::Vector> span = {e(acs, 1), acs.apply_phi(e(acs, 1)), acs.xi()};
  return gssf::Submanifold::build(acs, span);
}

// span{e1, phi e2, xi}: anti-invariant, lambda = 0. Needs n >= 2.
inline gssf::Submanifold anti_invariant_sub(const gssf::AlmostContactStructure& acs) {
  const std::vector<gssf::Vector> span = {e(acs, 1), acs.apply_phi(e(acs, 2)), acs.xi()};
  return gssf::Submanifold::build(acs, span);
}

// span{e1, (sqrt3/2) e2 + (1/2) phi e1, xi}: slant, lambda = 1/2. Needs n >= 2.
inline gssf::Submanifold slant_sub(const gssf::AlmostContactStructure& acs) {
  const std::vector<gssf::Vector> span = {
      e(acs, 1), std::sqrt(3.0) / 2.0 * e(acs, 2) + 0.5 * acs.apply_phi(e(acs, 1)), acs.xi()};
  return gssf::Submanifold::build(acs, span);
}

// m = 4: invariant pair {e1, phi e1} plus slant pair
// {e2, (sqrt3/2) e3 + (1/2) phi e2} with lambda = 1/2. Needs n >= 3.
inline gssf::Submanifold mixed_sub(const gssf::AlmostContactStructure& acs) {
  const std::vector<gssf::Vector> span = {
      e(acs, 1), acs.apply_phi(e(acs, 1)), e(acs, 2),
      std::sqrt(3.0) / 2.0 * e(acs, 3) + 0.5 * acs.apply_phi(e(acs, 2)), acs.xi()};
  return gssf::Submanifold::build(acs, span);
}

inline Params to_params(const gssf::SpaceFormParams& p) { return {p.f1, p.f2, p.f3}; }

inline Frames to_frames(const gssf::Submanifold& sub) {
  Frames f;
  const auto t = static_cast<Eigen::Index>(sub.tangent_frame().size());
  const auto q = static_cast<Eigen::Index>(sub.normal_frame().size());
  const Eigen::Index d = sub.structure().dim();
  f.tangent.resize(d, t);
  f.normal.resize(d, q);
  for (Eigen::Index i = 0; i < t; ++i) f.tangent.col(i) = sub.tangent_frame()[static_cast<size_t>(i)];
  for (Eigen::Index k = 0; k < q; ++k) f.normal.col(k) = sub.normal_frame()[static_cast<size_t>(k)];
  f.h = sub.sff();
  return f;
}

}  // namespace gssf_test

#endif  // GSSF_TESTS_SUPPORT_FIXTURES_HPP_
