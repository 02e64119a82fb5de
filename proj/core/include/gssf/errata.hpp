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

#ifndef GSSF_ERRATA_HPP_
#define GSSF_ERRATA_HPP_

#include <span>
#include <string>
#include <vector>

#include "gssf/contact_geometry.hpp"
#include "gssf/sampler.hpp"

namespace gssf {

struct ErrataWitness {
  std::string configuration;
  double printed_value = 0.0;
  double derived_value = 0.0;
};

/// A printed formula (or block of one) that disagrees with the value forced
/// by the contraction oracles, with a concrete configuration showing it.
struct ErrataEntry {
  std::string location;
  std::string printed_expression;
  std::string derived_expression;
  ErrataWitness witness;
};

/// Parameter points used for the randomized witness search.
std::vector<SpaceFormParams> default_param_grid();

/// Compares every printed closed form against its derived counterpart, block
/// by block. Fixed small witnesses are tried first, so entries they cover do
/// not depend on the seed; otherwise up to `search_trials` random
/// configurations per block are drawn from `sampler.derive(...)`. Theorem
/// entries record configurations where a printed inequality fails. Sorted by
/// location. Requires n >= 2.
std::vector<ErrataEntry> errata_report(const AlmostContactStructure& acs,
                                       const Sampler& sampler,
                                       std::span<const SpaceFormParams> param_grid,
                                       double tol, int search_trials = 64);

}  // namespace gssf

#endif  // GSSF_ERRATA_HPP_
