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

#ifndef GSSF_SAMPLER_HPP_
#define GSSF_SAMPLER_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gssf/frame_algebra.hpp"

namespace gssf {

/// Seeded source of random vectors and scalars.
///
/// The output is a pure function of the seed and the sequence of calls made
/// so far: mt19937_64 plus hand-written conversions, so no
/// implementation-defined std:: distribution is involved and results are
/// bit-identical across standard libraries. A Sampler is confined to one
/// thread; parallel work derives a child per trial with derive().
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  /// Number of sample calls made so far.
  std::uint64_t counter() const { return counter_; }

  /// Independent stream keyed by (seed, stream). Does not advance this one.
  Sampler derive(std::uint64_t stream) const;

  /// Uniform on [lo, hi]; requires lo < hi.
  double scalar(double lo, double hi);
  /// Standard normal deviate (Box-Muller).
  double gaussian();
  /// Euclidean unit vector, uniform on the sphere S^{dim-1}.
  Vector unit_vector(Eigen::Index dim);
  /// `count` symmetric size x size matrices with entries uniform on [-1, 1].
  std::vector<Eigen::MatrixXd> symmetric_coeffs(Eigen::Index size,
                                                Eigen::Index count);

 private:
  double uniform01();

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
};

/// Evaluates fn(trial, sampler.derive(trial)) for every trial index, spread
/// over `threads` workers, and returns the results in trial order. The output
/// does not depend on the thread count.
template <typename Result>
std::vector<Result> run_trials(const Sampler& sampler, int trials, int threads,
                               const std::function<Result(int, Sampler&)>& fn);

namespace detail {
void parallel_for(int count, int threads, const std::function<void(int)>& body);
}  // namespace detail

template <typename Result>
std::vector<Result> run_trials(const Sampler& sampler, int trials, int threads,
                               const std::function<Result(int, Sampler&)>& fn) {
  std::vector<Result> results(static_cast<size_t>(std::max(trials, 0)));
  detail::parallel_for(trials, threads, [&](int t) {
    Sampler local = sampler.derive(static_cast<std::uint64_t>(t));
    results[static_cast<size_t>(t)] = fn(t, local);
  });
  return results;
}

}  // namespace gssf

#endif  // GSSF_SAMPLER_HPP_
